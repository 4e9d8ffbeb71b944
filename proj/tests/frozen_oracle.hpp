// Independently computed reference values. Generated by tests/oracle/gen_expected.py; do not edit by hand.

#pragma once

namespace frozen {

struct SparseEntry { int row; int col; const char* value; };


inline constexpr int kDigits = 70;


inline const char* const kBeta[] = {
    "1.414213562373095048801688724209698078569671875376948073176679737990732",
    "2.000000000000000000000000000000000000000000000000000000000000000000000",
    "3.414213562373095048801688724209698078569671875376948073176679737990732",
    "6.828427124746190097603377448419396157139343750753896146353359475981465",
    "15.07106781186547524400844362104849039284835937688474036588339868995366",
    "34.97056274847714058562026469051637694283606250452337687812015685588879",
    "83.01219330881975641524897300208124427852048438593149412212371240173124",
    "198.9949493661166534161182106946788654998770312763863651223675816593513",
    "479.0020920410530632474853943914389752782745469387042243668588757204338",
    "1154.999133448222779911088999477556816056426125153794813856085333100219",
    "2787.000358937498623069663393346552607391126797246293852079029541920871",
    "6726.999851323220026050415786170662030838679719646382518014144416941962",
    "16239.00006158393867517049496568787666906848623653905888810731837580480",
    "39202.99997449109737639140571754641536897565219272450029422878116855155"};

inline const char* const kAlpha[] = {
    "1.500000000000000000000000000000000000000000000000000000000000000000000",
    "2.414213562373095048801688724209698078569671875376948073176679737990732",
    "4.602166064044968827810965323319934808310810803365557340087170982917643",
    "9.890784477609163606838949411046571337603678899131924486423017605774458",
    "22.67673480285092062958448240669250623773596502481426481633252299372589",
    "53.57040154666998471575179731643615022141115133896747259830481689324030",
    "128.1861658086775538073643628688249392623189692837846429602909760245357",
    "308.3623388928470917377137087443525466812300861465893871591011672697617",
    "743.3900705473223477986549527669747377971796239881827382062269697535598",
    "1793.690661394779309388298404714638568003502366685556939368796400513024",
    "4329.398918066885638300750072798650695206331584645722340980409203313990",
    "10451.20710332577487893528745071192540642552638191117731287818797909620",
    "25230.63616919183388940504034758229792627176513939714417798274358999780",
    "60911.42217834412673131762979666313957360084402295975288610057441507539"};

inline const char* const kMu[] = {
    "2.000000000000000000000000000000000000000000000000000000000000000000000",
    "5.000000000000000000000000000000000000000000000000000000000000000000000",
    "12.65685424949238019520675489683879231427868750150779229270671895196293",
    "31.51804062707469804603544044031745424517899660974669926558777986976115",
    "77.44174520602397574773022650450757770608307316178002897020061246121739",
    "188.7363403086800981781397206989253440672271282204553123591059721604467",
    "457.9015300196595804401412613359601330670903996702532457999630307503898",
    "1108.263760369247994887106408462967742591482400790595261965280146118164",
    "2678.992622237048304857504614734550786510491666961182485017200232098555",
    "6471.771030228138560276992519223613894217703165245137589141824837806112",
    "15629.15307089269442519291611534599624500696149310883917203747672267390",
    "37737.95060967290575389524783328462169709698410169304889002658396318581",
    "91114.36493949233286210681266608422584808500933859352129199759667298780",
    "219977.6372268581953936997047963416524385798440028368102364206461900865"};

inline const char* const kPatternSum[] = {
    "2.000000000000000000000000000000000000000000000000000000000000000000000",
    "8.000000000000000000000000000000000000000000000000000000000000000000000",
    "23.31370849898476039041350979367758462855737500301558458541343790392586",
    "61.03608125414939609207088088063490849035799321949339853117555973952229",
    "152.8834904120479514954604530090151554121661463235600579404012249224348",
    "375.4726806173601963562794413978506881344542564409106247182119443208935",
    "913.8030600393191608802825226719202661341807993405064915999260615007796",
    "2214.527520738495989774212816925935485182964801581190523930560292236328",
    "5355.985244474096609715009229469101573020983333922364970034400464197109"};

inline const char* const kPattern1[] = {
    "1.500000000000000000000000000000000000000000000000000000000000000000000",
    "5.000000000000000000000000000000000000000000000000000000000000000000000",
    "1.500000000000000000000000000000000000000000000000000000000000000000000"};

inline const char* const kPattern2[] = {
    "1.500000000000000000000000000000000000000000000000000000000000000000000",
    "2.414213562373095048801688724209698078569671875376948073176679737990732",
    "1.414213562373095048801688724209698078569671875376948073176679737990732",
    "12.65685424949238019520675489683879231427868750150779229270671895196293",
    "1.414213562373095048801688724209698078569671875376948073176679737990732",
    "2.414213562373095048801688724209698078569671875376948073176679737990732",
    "1.500000000000000000000000000000000000000000000000000000000000000000000"};

inline const char* const kPattern3[] = {
    "1.500000000000000000000000000000000000000000000000000000000000000000000",
    "2.414213562373095048801688724209698078569671875376948073176679737990732",
    "1.414213562373095048801688724209698078569671875376948073176679737990732",
    "4.602166064044968827810965323319934808310810803365557340087170982917643",
    "1.414213562373095048801688724209698078569671875376948073176679737990732",
    "2.000000000000000000000000000000000000000000000000000000000000000000000",
    "1.414213562373095048801688724209698078569671875376948073176679737990732",
    "31.51804062707469804603544044031745424517899660974669926558777986976115",
    "1.414213562373095048801688724209698078569671875376948073176679737990732",
    "2.000000000000000000000000000000000000000000000000000000000000000000000",
    "1.414213562373095048801688724209698078569671875376948073176679737990732",
    "4.602166064044968827810965323319934808310810803365557340087170982917643",
    "1.414213562373095048801688724209698078569671875376948073176679737990732",
    "2.414213562373095048801688724209698078569671875376948073176679737990732",
    "1.500000000000000000000000000000000000000000000000000000000000000000000"};

inline const char* const kPi3[] = {
    "1.414213562373095048801688724209698078569671875376948073176679737990732",
    "2.000000000000000000000000000000000000000000000000000000000000000000000",
    "1.414213562373095048801688724209698078569671875376948073176679737990732",
    "3.414213562373095048801688724209698078569671875376948073176679737990732",
    "1.414213562373095048801688724209698078569671875376948073176679737990732",
    "2.000000000000000000000000000000000000000000000000000000000000000000000",
    "1.414213562373095048801688724209698078569671875376948073176679737990732"};

inline const char* const kDeltaConservative[] = {
    "0.5000000000000000000000000000000000000000000000000000000000000000000000",
    "0.00000002707615323648736005446917117053996503784098805368930809005808374077234",
    "0.0000000007970475330939624011365385888794374249917351522424339620072770020604868",
    "0.00000000002346288870736158417314085136090741187800712255344661818933432928421563",
    "0.0000000000006906829563314607502503573914145788605070145747510564300901936028445556",
    "0.00000000000002033180790808133537129994718826937923137298808930043373225321249926066"};

inline constexpr unsigned long long kRepsStage0EtaHalfDelta1 = 36932869ULL;

inline const char* const kSigma2[] = {
    "0.2928932188134524755991556378951509607151640623115259634116601310046338"};

inline const char* const kSigmaSums[] = {
    "0.0",
    "0.2928932188134524755991556378951509607151640623115259634116601310046338",
    "0.4142135623730950488016887242096980785696718753769480731766797379907325",
    "0.4644660940672623779957781894757548035758203115576298170583006550231688",
    "0.4852813742385702928101323452581884714180312522616884390600784279443949",
    "0.4939033455901217923755134989593778607397578070342529389381437991343791"};

inline const char* const kRho1[] = {
    "0.4142135623730950488016887242096980785696718753769480731766797379907325",
    "0.0",
    "1.414213562373095048801688724209698078569671875376948073176679737990732",
    "1.000000000000000000000000000000000000000000000000000000000000000000000"};

inline const char* const kRhoSums[] = {
    "1.000000000000000000000000000000000000000000000000000000000000000000000",
    "2.828427124746190097603377448419396157139343750753896146353359475981465",
    "10.65685424949238019520675489683879231427868750150779229270671895196293",
    "49.45584412271571087843039703577456541425409375678506531718023528383318",
    "259.1076477383247444897553626272922232284098125346792227322545358951474",
    "1441.248916810278474888861249346946020070532656442243517320106666375274",
    "8235.189893630452782110517564898640804794884501097672789090491397029013"};

inline const char* const kW2Vec[] = {
    "0.4142135623730950488016887242096980785696718753769480731766797379907325",
    "1.000000000000000000000000000000000000000000000000000000000000000000000",
    "1.000000000000000000000000000000000000000000000000000000000000000000000",
    "1.000000000000000000000000000000000000000000000000000000000000000000000"};

inline const char* const kPhi1[] = {
    "0.0",
    "2.000000000000000000000000000000000000000000000000000000000000000000000",
    "1.000000000000000000000000000000000000000000000000000000000000000000000",
    "1.000000000000000000000000000000000000000000000000000000000000000000000"};

inline const char* const kPhi2[] = {
    "0.0",
    "0.0",
    "0.0",
    "3.414213562373095048801688724209698078569671875376948073176679737990732",
    "0.4142135623730950488016887242096980785696718753769480731766797379907325",
    "1.000000000000000000000000000000000000000000000000000000000000000000000",
    "1.000000000000000000000000000000000000000000000000000000000000000000000",
    "1.000000000000000000000000000000000000000000000000000000000000000000000"};

inline const char* const kGammaStar1[] = {
    "0.0",
    "8.000000000000000000000000000000000000000000000000000000000000000000000",
    "4.000000000000000000000000000000000000000000000000000000000000000000000",
    "4.000000000000000000000000000000000000000000000000000000000000000000000"};

inline const char* const kGammaSuper1[] = {
    "-16.00000000000000000000000000000000000000000000000000000000000000000000",
    "-8.000000000000000000000000000000000000000000000000000000000000000000000",
    "-4.000000000000000000000000000000000000000000000000000000000000000000000"};

inline constexpr int kLambda1Count = 5;

inline const SparseEntry kLambda1[] = {
    {0, 1, "2.000000000000000000000000000000000000000000000000000000000000000000000"},
    {1, 0, "1.000000000000000000000000000000000000000000000000000000000000000000000"},
    {1, 2, "0.5000000000000000000000000000000000000000000000000000000000000000000000"},
    {1, 3, "0.5000000000000000000000000000000000000000000000000000000000000000000000"},
    {2, 3, "0.5000000000000000000000000000000000000000000000000000000000000000000000"}};

inline constexpr int kLambda2Count = 16;

inline const SparseEntry kLambda2[] = {
    {0, 1, "2.000000000000000000000000000000000000000000000000000000000000000000000"},
    {1, 0, "1.000000000000000000000000000000000000000000000000000000000000000000000"},
    {1, 2, "1.414213562373095048801688724209698078569671875376948073176679737990732"},
    {1, 3, "1.000000000000000000000000000000000000000000000000000000000000000000000"},
    {2, 3, "4.828427124746190097603377448419396157139343750753896146353359475981465"},
    {3, 1, "1.414213562373095048801688724209698078569671875376948073176679737990732"},
    {3, 2, "3.414213562373095048801688724209698078569671875376948073176679737990732"},
    {3, 4, "0.1213203435596425732025330863145471178545078130654221097650196069860987"},
    {3, 5, "0.2928932188134524755991556378951509607151640623115259634116601310046338"},
    {3, 6, "0.2928932188134524755991556378951509607151640623115259634116601310046338"},
    {3, 7, "0.2928932188134524755991556378951509607151640623115259634116601310046338"},
    {4, 5, "0.2071067811865475244008443621048490392848359376884740365883398689953662"},
    {5, 4, "0.08578643762690495119831127579030192143032812462305192682332026200926752"},
    {5, 6, "0.2071067811865475244008443621048490392848359376884740365883398689953662"},
    {5, 7, "0.2071067811865475244008443621048490392848359376884740365883398689953662"},
    {6, 7, "0.5000000000000000000000000000000000000000000000000000000000000000000000"}};

inline constexpr int kLambda3Count = 44;

inline const SparseEntry kLambda3[] = {
    {0, 1, "2.000000000000000000000000000000000000000000000000000000000000000000000"},
    {1, 0, "1.000000000000000000000000000000000000000000000000000000000000000000000"},
    {1, 2, "1.414213562373095048801688724209698078569671875376948073176679737990732"},
    {1, 3, "1.000000000000000000000000000000000000000000000000000000000000000000000"},
    {2, 3, "4.828427124746190097603377448419396157139343750753896146353359475981465"},
    {3, 1, "1.414213562373095048801688724209698078569671875376948073176679737990732"},
    {3, 2, "3.414213562373095048801688724209698078569671875376948073176679737990732"},
    {3, 4, "0.6352415659319173247875922381301666832616194289610401210395216093261460"},
    {3, 5, "0.8983672379240401324196015720702031674647135479224550800376036027019790"},
    {3, 6, "0.6352415659319173247875922381301666832616194289610401210395216093261460"},
    {3, 7, "0.4491836189620200662098007860351015837323567739612275400188018013509895"},
    {4, 5, "2.168850369787874781994786048330536533987952405844535322116646821354271"},
    {5, 4, "0.8983672379240401324196015720702031674647135479224550800376036027019790"},
    {5, 6, "3.067217607711914914414387620400739701452665953766990402154250424056250"},
    {5, 7, "2.168850369787874781994786048330536533987952405844535322116646821354271"},
    {6, 7, "12.64098632478745417481313338579308900486918912506758677065844131217531"},
    {7, 3, "1.618033988749894848204586834365638117720309179805762862135448622705260"},
    {7, 4, "0.6352415659319173247875922381301666832616194289610401210395216093261460"},
    {7, 5, "3.067217607711914914414387620400739701452665953766990402154250424056250"},
    {7, 6, "8.938527151143621935611153527262182620154903742339556247464669278792917"},
    {7, 8, "0.04634024771296905721380313987855801193271372471574626877529801629522317"},
    {7, 9, "0.06553500679940964098006686870670994484961197377708402092111977070461561"},
    {7, 10, "0.04634024771296905721380313987855801193271372471574626877529801629522317"},
    {7, 11, "0.2237505090247573963877400171705359135646513969856605793928355739996776"},
    {7, 12, "0.07498009584667351598872994643598910592179408834967584098972159069087554"},
    {7, 13, "0.1810179643010737774052856293098830039328383638186956737152423440047950"},
    {7, 14, "0.1810179643010737774052856293098830039328383638186956737152423440047950"},
    {7, 15, "0.1810179643010737774052856293098830039328383638186956737152423440047950"},
    {8, 9, "0.07910775111267387770383657423191298435751971160428827923585790164753098"},
    {9, 8, "0.03276750339970482049003343435335497242480598688854201046055988535230781"},
    {9, 10, "0.1118752545123786981938700085852679567823256984928302896964177869998388"},
    {9, 11, "0.07910775111267387770383657423191298435751971160428827923585790164753098"},
    {10, 11, "0.4610737623627790294992497398662748666372105317985254171004092789422705"},
    {11, 9, "0.07910775111267387770383657423191298435751971160428827923585790164753098"},
    {11, 10, "0.3028582601374312740915765914024488979221711085899488586286934756472086"},
    {11, 12, "0.04634024771296905721380313987855801193271372471574626877529801629522317"},
    {11, 13, "0.1118752545123786981938700085852679567823256984928302896964177869998388"},
    {11, 14, "0.1118752545123786981938700085852679567823256984928302896964177869998388"},
    {11, 15, "0.1118752545123786981938700085852679567823256984928302896964177869998388"},
    {12, 13, "0.2071067811865475244008443621048490392848359376884740365883398689953662"},
    {13, 12, "0.08578643762690495119831127579030192143032812462305192682332026200926752"},
    {13, 14, "0.2071067811865475244008443621048490392848359376884740365883398689953662"},
    {13, 15, "0.2071067811865475244008443621048490392848359376884740365883398689953662"},
    {14, 15, "0.5000000000000000000000000000000000000000000000000000000000000000000000"}};

inline const char* const kLambda3Row5[] = {
    "0.8983672379240401324196015720702031674647135479224550800376036027019790",
    "3.067217607711914914414387620400739701452665953766990402154250424056250",
    "2.168850369787874781994786048330536533987952405844535322116646821354271"};

inline const int kLambda3Row5Cols[] = {4, 6, 7};

inline const char* const kLambda3Row5Coeff[] = {
    "2.168850369787874781994786048330536533987952405844535322116646821354271"};

inline const char* const kLambda3Row5Sum[] = {
    "6.134435215423829828828775240801479402905331907533980804308500848112500"};

inline const char* const kW2SecondEig[] = {
    "0.4552729135499315972769155040019108897146595364005967973424212170265731",
    "0.1775075438149530647133032288374046661097168600438903199215755158567910",
    "0.06120808350944696323082322602439370943867508419012006715210062528513805"};

}  // namespace frozen

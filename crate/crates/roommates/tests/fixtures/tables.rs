//! Frozen reference values for the regression suite.
//!
//! Every fraction below was produced by an independent exact integrator
//! (a from-scratch implementation in another language, using a different
//! sparse representation) and double-checked through the direct-versus-
//! complement route identity at each size. The suite treats them as
//! ground truth; the engine must reproduce them bit for bit.

/// p_n as exact fractions, n = 2..=12.
pub const P_N: &[(u32, &str)] = &[
    (2, "1"),
    (3, "3/4"),
    (4, "26/27"),
    (5, "4075/6912"),
    (6, "181431847/194400000"),
    (7, "246462083/518400000"),
    (8, "809419574956627/889426440000000"),
    (9, "11365049284140796201/29144725585920000000"),
    (10, "25365465754520943457921774207/28460490127321448448000000000"),
    (11, "176967745750762518431538515329/546441410444571810201600000000"),
    (
        12,
        "13544124829485098788469430650439043569062157071/15469783933925839494793980316271247360000000000",
    ),
];

/// Per-type integrals P(a) for n = 4.
pub const TYPE_INTEGRALS_N4: &[(&str, &str)] = &[
    ("2^2", "233/648"),
    ("4^1", "25/1296"),
    ("1^1,3^1", "1/216"),
];

/// Per-type integrals for n = 6.
pub const TYPE_INTEGRALS_N6: &[(&str, &str)] = &[
    ("2^3", "448035973/5832000000"),
    ("2^1,4^1", "307841/144000000"),
    ("6^1", "2591729/11664000000"),
    ("1^1,2^1,3^1", "38077/86400000"),
    ("1^1,5^1", "26257/777600000"),
    ("3^2", "1742111/7776000000"),
];

/// Per-type integrals for n = 8.
pub const TYPE_INTEGRALS_N8: &[(&str, &str)] = &[
    ("2^4", "1245959394495647/107585022182400000"),
    ("2^2,4^1", "5211637894488503/26896255545600000000"),
    ("2^1,6^1", "914248620325799/53792511091200000000"),
    ("4^2", "1493807915753/1195389135360000000"),
    ("8^1", "622186155317/498078806400000000"),
    ("1^1,7^1", "49958102093/384232222080000000"),
    ("1^1,2^2,3^1", "441974732789/12807740736000000"),
    ("1^1,3^1,4^1", "1249592153/9605805552000000"),
    ("1^1,2^1,5^1", "58105985423/25615481472000000"),
    ("2^1,3^2", "76670733315619/4482709257600000000"),
    ("3^1,5^1", "8979064491643/7172334812160000000"),
];

/// Per-type integrals for n = 10.
pub const TYPE_INTEGRALS_N10: &[(&str, &str)] = &[
    ("2^5", "433857166916418660757431885203/322741958043825225400320000000000"),
    ("2^3,4^1", "4794693488032751578104859937/322741958043825225400320000000000"),
    ("2^2,6^1", "726158117631681830112186713/645483916087650450800640000000000"),
    ("2^1,4^2", "94089601969271248978571831/1290967832175300901601280000000000"),
    ("2^1,8^1", "18812621042800384360939621/258193566435060180320256000000000"),
    ("4^1,6^1", "10678226865621944175135083/2581935664350601803202560000000000"),
    ("10^1", "42708804188035567140443357/10327742657402407212810240000000000"),
    ("1^1,2^3,3^1", "1882697003227025150390719/819662115666857715302400000000"),
    ("1^1,3^3", "158398327239405983477/512288822291786072064000000000"),
    ("1^1,2^1,3^1,4^1", "2765878679393466620633/409831057833428857651200000000"),
    ("1^1,2^2,5^1", "4336602947669955694769/32786484626674308612096000000"),
    ("1^1,4^1,5^1", "126601947989502609349/409831057833428857651200000000"),
    ("1^1,3^1,6^1", "633196266619396193087/2049155289167144288256000000000"),
    ("1^1,2^1,7^1", "789921304062168675601/117094587952408245043200000000"),
    ("1^1,9^1", "1265995491264426770353/4098310578334288576512000000000"),
    ("2^2,3^2", "2918990176269285877130918549/2581935664350601803202560000000000"),
    ("2^1,3^1,5^1", "18845369089082632479619357/258193566435060180320256000000000"),
    ("3^2,4^1", "21410287713579117222366871/5163871328701203606405120000000000"),
    ("3^1,7^1", "610894828667022260751797/147539180820034388754432000000000"),
    ("5^2", "8541874436295301342281403/2065548531480481442562048000000000"),
];

/// Per-type integrals for n = 12.
pub const TYPE_INTEGRALS_N12: &[(&str, &str)] = &[
    (
        "2^6",
        "325899908494883644126440199857602193757211429627/2572934463890545624774134806202233860915200000000000",
    ),
    (
        "2^4,4^1",
        "1209115974791734652605681563324122140963407221/1225206887566926487987683241048682790912000000000000",
    ),
    (
        "2^2,4^2",
        "16288072152327610053000950409164225186650151/4288224106484242707956891343670389768192000000000000",
    ),
    (
        "4^3",
        "231703173390597300042186053017177445722753/25729344638905456247741348062022338609152000000000000",
    ),
    (
        "2^3,6^1",
        "3378294177941932509053172872298924486923764591/51458689277810912495482696124044677218304000000000000",
    ),
    (
        "2^1,4^1,6^1",
        "417880592074077264470531487240272595070729/2144112053242121353978445671835194884096000000000000",
    ),
    (
        "6^2",
        "1853330912748299530044034784734880537462353/205834757111243649981930784496178708873216000000000000",
    ),
    (
        "2^2,8^1",
        "508893194633666952579907861671385135829521/134007003327632584623652854489699680256000000000000",
    ),
    (
        "4^1,8^1",
        "4412925241742005785167715449536219676971/490082755026770595195073296419473116364800000000000",
    ),
    (
        "2^1,10^1",
        "53484730261191253361608747405394814514357/274446342814991533309241045994904945164288000000000",
    ),
    (
        "12^1",
        "14826641669894164340076941832557808383893/1646678056889949199855446275969429670985728000000000",
    ),
    (
        "1^1,2^4,3^1",
        "122503966894472107602242737308438169403/920820472257490446118689304539955200000000000",
    ),
    (
        "1^1,2^1,3^3",
        "1222543880169122622560877738575059/93543667022983156431104945223106560000000000",
    ),
    (
        "1^1,2^2,3^1,4^1",
        "193959334006722457965074605079586629657/618791357357033579791759212650849894400000000000",
    ),
    (
        "1^1,3^1,4^2",
        "2855025200767172513735081732106863/5729549605157718331405177894915276800000000000",
    ),
    (
        "1^1,2^3,5^1",
        "8437895290055710585350317910566101247317/1237582714714067159583518425301699788800000000000",
    ),
    (
        "1^1,3^2,5^1",
        "176230039945164631684723423501203937/353595061346876331309576692943342796800000000000",
    ),
    (
        "1^1,2^1,4^1,5^1",
        "1795748861495201189078302039999290739/137509190523785239953724269477966643200000000000",
    ),
    (
        "1^1,2^1,3^1,6^1",
        "2694291584800385097759305707384840499/206263785785677859930586404216949964800000000000",
    ),
    (
        "1^1,5^1,6^1",
        "2174740904996317920876887889334183/4365371127739213966784897443744972800000000000",
    ),
    (
        "1^1,2^2,7^1",
        "1695852720842076492466118915028628181/5412169306329739764942500402194022400000000000",
    ),
    (
        "1^1,4^1,7^1",
        "88077935438211707375963113857429259/176797530673438165654788346471671398400000000000",
    ),
    (
        "1^1,3^1,8^1",
        "19270992061340957619880212582236803/38674459834814598736984950790678118400000000000",
    ),
    (
        "1^1,2^1,9^1",
        "1197147888812853403164542654655246797/91672793682523493302482846318644428800000000000",
    ),
    (
        "1^1,11^1",
        "3699232196202777873480674898554033731/7425496288284402957501110551810198732800000000000",
    ),
    (
        "2^3,3^2",
        "161499154693883709213457621140881273357670713/2450413775133852975975366482097365581824000000000000",
    ),
    (
        "2^2,3^1,5^1",
        "4348643545825433788892694617856351275828603/1143526428395798055455171024978770604851200000000000",
    ),
    (
        "2^1,3^2,4^1",
        "357327697339220191285941924523831564051/1829642285433276888728273639966032967761920000000",
    ),
    (
        "3^4",
        "9836824308843120655187019024812769030613/1089072788948379100433496214265495814144000000000000",
    ),
    (
        "2^1,3^1,7^1",
        "91054335946285045516721350625722458874631/466745480977876757328641234685212491776000000000000",
    ),
    (
        "3^2,6^1",
        "618748213165565813756023362735829302961763/68611585703747883327310261498726236291072000000000000",
    ),
    (
        "2^1,5^2",
        "26742627021755978677974945561880197844453/137223171407495766654620522997452472582144000000000",
    ),
    (
        "3^1,4^1,5^1",
        "61829720130534204153121031185033846815523/6861158570374788332731026149872623629107200000000000",
    ),
    (
        "3^1,9^1",
        "20608745217756332777239346633128265563123/2287052856791596110910342049957541209702400000000000",
    ),
    (
        "5^1,7^1",
        "17650822382212529975478949518938933533441/1960331020107082380780293185677892465459200000000000",
    ),
];

/// Per-type integrals for odd sizes n = 3, 5, 7.
pub const TYPE_INTEGRALS_ODD_SMALL: &[(&str, &str)] = &[
    // n = 3
    ("1^1,2^1", "1/4"),
    ("3^1", "1/8"),
    // n = 5
    ("1^1,2^2", "833/20736"),
    ("2^1,3^1", "491/27648"),
    ("1^1,4^1", "1/2304"),
    ("5^1", "191/82944"),
    // n = 7
    ("1^1,2^3", "110831617/23328000000"),
    ("2^2,3^1", "5103637/2592000000"),
    ("1^1,2^1,4^1", "797731/23328000000"),
    ("2^1,5^1", "1945639/9331200000"),
    ("1^1,6^1", "6541/2916000000"),
    ("3^1,4^1", "336349/18662400000"),
    ("1^1,3^2", "2183/972000000"),
    ("7^1", "558779/31104000000"),
];

/// Per-type integrals for n = 9.
pub const TYPE_INTEGRALS_N9: &[(&str, &str)] = &[
    ("1^1,2^4", "12242957448855683129/27541765678694400000000"),
    ("2^3,3^1", "39406434169244998649/220334125429555200000000"),
    ("1^1,2^2,4^1", "2998148628185909/1311512651366400000000"),
    ("2^2,5^1", "234360972607515209/14688941695303680000000"),
    ("1^1,4^2", "184134811312313/27541765678694400000000"),
    ("2^1,3^1,4^1", "3502136387768779/2937788339060736000000"),
    ("1^1,2^1,6^1", "3617070987119831/27541765678694400000000"),
    ("3^3", "374799675933251/4896313898434560000000"),
    ("1^1,8^1", "26303739761759/3934537954099200000000"),
    ("2^1,7^1", "12476274579169301/10492101210931200000000"),
    ("1^1,2^1,3^2", "1206877128048157/9180588559564800000000"),
    ("3^1,6^1", "16811008475015879/220334125429555200000000"),
    ("1^1,3^1,5^1", "2455964944171/367223542382592000000"),
    ("4^1,5^1", "671436255551711/8813365017182208000000"),
    ("9^1", "1864835590786319/24481569492172800000000"),
];

/// Per-type integrals for n = 11.
pub const TYPE_INTEGRALS_N11: &[(&str, &str)] = &[
    ("1^1,2^5", "88853486478784120344992170351/2581935664350601803202560000000000"),
    ("2^4,3^1", "710107424563570828306588840739/51638713287012036064051200000000000"),
    ("1^1,2^3,4^1", "4572509990406797552502341/34425808858008024042700800000000"),
    ("2^3,5^1", "109197089334060411167876570117/103277426574024072128102400000000000"),
    ("1^1,2^1,4^2", "268054718171660435931803/860645221450200601067520000000000"),
    ("2^2,3^1,4^1", "14352373021321999225705658471/206554853148048144256204800000000000"),
    ("1^1,2^2,6^1", "1168831786137020235667067/172129044290040120213504000000000"),
    ("2^1,3^3", "183002200715285406357445301/45901078477344032056934400000000000"),
    ("1^1,4^1,6^1", "743715115011041403407/57376348096680040071168000000000"),
    ("2^2,7^1", "204627732127480795488157591/2950783616400687775088640000000000"),
    ("1^1,2^1,8^1", "100516822545753167453891/322741958043825225400320000000000"),
    ("2^1,3^1,6^1", "547557978971950371021494551/137703235432032096170803200000000000"),
    ("1^1,10^1", "66933419040890225282203/5163871328701203606405120000000000"),
    ("2^1,4^1,5^1", "2461017693717356460362113427/619664559444144432768614400000000000"),
    ("1^1,2^2,3^2", "4386643900008678909343237/645483916087650450800640000000000"),
    ("3^2,5^1", "41866526759821300816071211/206554853148048144256204800000000000"),
    ("1^1,3^2,4^1", "531499853646597948383/40983105783342885765120000000000"),
    ("3^1,4^2", "373490614662460067378083/1844239760250429859430400000000000"),
    ("1^1,2^1,3^1,5^1", "804392338445761377188767/2581935664350601803202560000000000"),
    ("2^1,9^1", "182277891278802756936253723/45901078477344032056934400000000000"),
    ("1^1,5^2", "16733378688533122315949/1290967832175300901601280000000000"),
    ("3^1,8^1", "62737571161936687651226813/309832279722072216384307200000000000"),
    ("1^1,3^1,7^1", "19128779897378689455131/1475391808200343887544320000000000"),
    ("4^1,7^1", "17908596195396917111551979/88523508492020633252659200000000000"),
    ("11^1", "62675660640300931114214381/309832279722072216384307200000000000"),
    ("5^1,6^1", "6963996535691809265274221/34425808858008024042700800000000000"),
];

/// Family cardinalities (n, |all-parts-even family|, |odd-witness family|)
/// for even n; the first must equal p(n/2) and the second
/// p(n) - p(n-2) - p(n/2) in terms of partition numbers.
pub const FAMILY_CARDINALITIES: &[(u32, usize, usize)] = &[
    (4, 2, 1),
    (6, 3, 3),
    (8, 5, 6),
    (10, 7, 13),
    (12, 11, 24),
    (14, 15, 43),
    (16, 22, 74),
    (18, 30, 124),
];

// Frozen expected values for the test suites.
//
// Every value below was computed offline with an independent
// arbitrary-precision reference (GMP-based) before being enshrined here.
// Wide integers are kept as decimal strings and parsed at test time.
#pragma once

#include <cstdint>
#include <utility>

namespace fixtures {

// Strong base-2 pseudoprimes below 10^6 (odd composites passing MR base 2).
inline constexpr std::uint32_t kStrongPsp2[] = {
    2047, 3277, 4033, 4681, 8321, 15841, 29341, 42799,
    49141, 52633, 65281, 74665, 80581, 85489, 88357, 90751,
    104653, 130561, 196093, 220729, 233017, 252601, 253241, 256999,
    271951, 280601, 314821, 357761, 390937, 458989, 476971, 486737,
    489997, 514447, 580337, 635401, 647089, 741751, 800605, 818201,
    838861, 873181, 877099, 916327, 976873, 983401};

// Strong Lucas pseudoprimes below 10^6 (Selfridge parameters).
inline constexpr std::uint32_t kStrongLucasPsp[] = {
    5459, 5777, 10877, 16109, 18971, 22499, 24569, 25199,
    40309, 58519, 75077, 97439, 100127, 113573, 115639, 130139,
    155819, 158399, 161027, 162133, 176399, 176471, 189419, 192509,
    197801, 224369, 230691, 231703, 243629, 253259, 268349, 288919,
    313499, 324899, 353219, 366799, 391169, 430127, 436409, 455519,
    487199, 510479, 572669, 611399, 622169, 635627, 636199, 701999,
    794611, 835999, 839159, 851927, 871859, 875879, 887879, 895439,
    950821, 960859};

// All 646 Carmichael numbers below 10^9 (Korselt-criterion generator).
inline constexpr std::uint32_t kCarmichaelsBelow1e9[] = {
    561, 1105, 1729, 2465, 2821, 6601, 8911, 10585,
    15841, 29341, 41041, 46657, 52633, 62745, 63973, 75361,
    101101, 115921, 126217, 162401, 172081, 188461, 252601, 278545,
    294409, 314821, 334153, 340561, 399001, 410041, 449065, 488881,
    512461, 530881, 552721, 656601, 658801, 670033, 748657, 825265,
    838201, 852841, 997633, 1024651, 1033669, 1050985, 1082809, 1152271,
    1193221, 1461241, 1569457, 1615681, 1773289, 1857241, 1909001, 2100901,
    2113921, 2433601, 2455921, 2508013, 2531845, 2628073, 2704801, 3057601,
    3146221, 3224065, 3581761, 3664585, 3828001, 4335241, 4463641, 4767841,
    4903921, 4909177, 5031181, 5049001, 5148001, 5310721, 5444489, 5481451,
    5632705, 5968873, 6049681, 6054985, 6189121, 6313681, 6733693, 6840001,
    6868261, 7207201, 7519441, 7995169, 8134561, 8341201, 8355841, 8719309,
    8719921, 8830801, 8927101, 9439201, 9494101, 9582145, 9585541, 9613297,
    9890881, 10024561, 10267951, 10402561, 10606681, 10837321, 10877581, 11119105,
    11205601, 11921001, 11972017, 12261061, 12262321, 12490201, 12945745, 13187665,
    13696033, 13992265, 14469841, 14676481, 14913991, 15247621, 15403285, 15829633,
    15888313, 16046641, 16778881, 17098369, 17236801, 17316001, 17586361, 17812081,
    18162001, 18307381, 18900973, 19384289, 19683001, 20964961, 21584305, 22665505,
    23382529, 25603201, 26280073, 26474581, 26719701, 26921089, 26932081, 27062101,
    27336673, 27402481, 28787185, 29020321, 29111881, 31146661, 31405501, 31692805,
    32914441, 33302401, 33596641, 34196401, 34657141, 34901461, 35571601, 35703361,
    36121345, 36765901, 37167361, 37280881, 37354465, 37964809, 38151361, 38624041,
    38637361, 39353665, 40160737, 40280065, 40430401, 40622401, 40917241, 41298985,
    41341321, 41471521, 42490801, 43286881, 43331401, 43584481, 43620409, 44238481,
    45318561, 45877861, 45890209, 46483633, 47006785, 48321001, 48628801, 49333201,
    50201089, 53245921, 53711113, 54767881, 55462177, 56052361, 58489201, 60112885,
    60957361, 62756641, 64377991, 64774081, 65037817, 65241793, 67371265, 67653433,
    67902031, 67994641, 68154001, 69331969, 70561921, 72108421, 72286501, 74165065,
    75151441, 75681541, 75765313, 76595761, 77826001, 78091201, 78120001, 79411201,
    79624621, 80282161, 80927821, 81638401, 81926461, 82929001, 83099521, 83966401,
    84311569, 84350561, 84417985, 87318001, 88689601, 90698401, 92625121, 93030145,
    93614521, 93869665, 94536001, 96895441, 99036001, 99830641, 99861985, 100427041,
    101649241, 101957401, 102090781, 104404861, 104569501, 104852881, 105117481, 105309289,
    105869401, 106041937, 107714881, 109393201, 109577161, 111291181, 114910489, 115039081,
    115542505, 116682721, 118901521, 119327041, 120981601, 121247281, 122785741, 124630273,
    127664461, 128697361, 129255841, 129762001, 130032865, 130497361, 132511681, 133205761,
    133344793, 133800661, 134809921, 134857801, 135556345, 136625941, 139592101, 139952671,
    140241361, 144218341, 145124785, 146843929, 150846961, 151530401, 151813201, 153589801,
    153927961, 157731841, 158404141, 158864833, 159492061, 161035057, 161242705, 161913961,
    163954561, 167979421, 168659569, 169057801, 169570801, 170947105, 171454321, 171679561,
    172290241, 172430401, 172947529, 173085121, 174352641, 175997185, 176659201, 178451857,
    178482151, 178837201, 180115489, 181154701, 182356993, 184353001, 186393481, 186782401,
    187188001, 188516329, 188689501, 189941761, 193708801, 193910977, 194120389, 194675041,
    196358977, 200753281, 206955841, 208969201, 212027401, 213835861, 214850881, 214852609,
    216821881, 221884001, 225745345, 226509361, 227752993, 228842209, 230630401, 230996949,
    231194965, 237597361, 238244041, 238527745, 241242001, 242641153, 246446929, 247095361,
    250200721, 252141121, 255160621, 256828321, 257495641, 258634741, 266003101, 270857521,
    271481329, 271794601, 273769921, 274569601, 275283401, 277241401, 278152381, 279377281,
    280067761, 280761481, 288120421, 289766701, 289860481, 291848401, 292244833, 292776121,
    295643089, 295826581, 296559361, 299736181, 300614161, 301704985, 302751505, 306871201,
    311388337, 318266641, 321197185, 321602401, 325546585, 328573477, 329769721, 333065305,
    333229141, 334783585, 338740417, 346808881, 348612265, 354938221, 357277921, 357380101,
    358940737, 360067201, 362569201, 364590721, 366532321, 366652201, 367804801, 367939585,
    368113411, 382304161, 382536001, 390489121, 392099401, 393122521, 393513121, 393716701,
    395044651, 395136505, 396262945, 399906001, 403043257, 403317421, 405739681, 413058601,
    413138881, 413631505, 416964241, 417241045, 419520241, 426821473, 429553345, 434330401,
    434932961, 438359041, 440306461, 440707345, 455106601, 458368201, 461502097, 461854261,
    462199681, 471441001, 471905281, 473847121, 477726145, 481239361, 483006889, 484662529,
    490099681, 490503601, 492559141, 496050841, 499310197, 503758801, 507726901, 509033161,
    510825601, 511338241, 516684961, 517937581, 518117041, 518706721, 527761081, 529782121,
    530443201, 532758241, 533860309, 540066241, 542497201, 544101481, 545363281, 545570641,
    547652161, 548871961, 549117205, 549333121, 549538081, 551672221, 552894301, 555465601,
    556199281, 556450777, 557160241, 557795161, 558570961, 558977761, 561481921, 561777121,
    564651361, 568227241, 569332177, 573896881, 577240273, 579606301, 580565233, 590754385,
    593234929, 595405201, 597717121, 600892993, 602074585, 602426161, 602593441, 606057985,
    609865201, 611397865, 612347905, 612816751, 616463809, 618068881, 620169409, 621101185,
    625060801, 625482001, 629692801, 631071001, 633639097, 638959321, 642708001, 652969351,
    656187001, 662086041, 672389641, 683032801, 683379841, 684106401, 686059921, 689880801,
    697906561, 698548201, 702683101, 703995733, 704934361, 705101761, 707926801, 710382401,
    710541481, 711374401, 713588401, 717164449, 721244161, 722923201, 727083001, 739444021,
    743404663, 744866305, 745864945, 746706961, 752102401, 759472561, 765245881, 771043201,
    775368901, 775866001, 776176261, 781347841, 784966297, 790020001, 790623289, 794937601,
    798770161, 804978721, 809702401, 809883361, 814056001, 822531841, 824389441, 824405041,
    829678141, 832060801, 833608321, 834244501, 834720601, 836515681, 839275921, 841340521,
    842202361, 843704401, 847491361, 849064321, 851703301, 851934601, 852729121, 854197345,
    855734401, 860056705, 863984881, 867800701, 868234081, 876850801, 882796321, 885336481,
    888700681, 891706861, 897880321, 902645857, 914801665, 918661501, 928482241, 930745621,
    931694401, 934784929, 935794081, 939947009, 940123801, 941056273, 945959365, 947993761,
    954732853, 955134181, 957044881, 958735681, 958762729, 958970545, 962442001, 962500561,
    963163201, 963168193, 968553181, 968915521, 975303121, 977737321, 977892241, 981567505,
    981789337, 985052881, 986088961, 990893569, 993420289, 993905641};

// Strong Lucas verdicts for small odd n (edge semantics).
inline constexpr std::pair<std::uint32_t, bool> kLucasSmall[] = {{3, true}, {5, true}, {7, true}, {9, false}, {11, true}, {13, true}, {15, false}, {17, true}, {19, true}, {21, false}, {25, false}, {49, false}};

// 63..72-bit values with primality verdicts (decimal string, is_prime).
inline constexpr std::pair<const char*, bool> kWideBattery[] = {
    {"18446744073709551557", true},
    {"18446744073709551629", true},
    {"18446744073709551617", false},
    {"4722366482869645213603", true},
    {"4722366482869645213695", false},
    {"-1", false},
    {"18446744073709551629", true},
    {"24595658764946068909", true},
    {"18451790940854698513", false},
    {"18446872622304672121", false},
    {"73786976294838206473", true},
    {"98382635059784275289", true},
    {"73799419122450615481", false},
    {"73791437922768215521", false},
    {"295147905179352825889", true},
    {"393530540239137101267", true},
    {"295163999591188597223", false},
    {"295154191430038266769", false},
    {"1180591620717411303449", true},
    {"1574122160956548404629", true},
    {"1180656807085324907363", false},
    {"1180605602354824097929", false},
    {"2361183241434822606859", true},
    {"3148244321913096809173", true},
    {"2361240500560115566111", false},
    {"2361191157797090554849", false},
    {"3800451312941290530549", false},
    {"2410538199767214988301", false},
    {"1250306105899187448941", false},
    {"994629821567846996609", false},
    {"3828985975789059133315", false},
    {"1544226028119886511675", false},
    {"2490135945422007409425", false},
    {"1722354849233318248265", false},
    {"3936370106266900544595", false},
    {"2503946638005710727605", false},
    {"4587989946499201620453", false},
    {"4138831861950471482313", false},
    {"3902091903427854274071", false},
    {"26607834466554147809", false},
    {"3647274126116868957399", false},
    {"4325735433177509496115", false},
    {"4342624168670701936961", false},
    {"3124132692173656570589", false},
    {"787423588827074371267", false},
    {"2952065102985530807527", false},
    {"585696730102704121505", false},
    {"2331112814650833678697", false},
    {"861799074695474936573", false},
    {"4486734244452142078179", false},
    {"906337416906989313437", false},
    {"2116756054889267775937", false},
    {"3208063633344029676293", false},
    {"2380710110829673106211", false},
    {"972489591567073887757", false},
    {"1526017887635139620891", false},
    {"3398327277415467639609", false},
    {"3180496381461289400343", false},
    {"954076150960816568841", false},
    {"2855825012047619250225", false},
    {"1041491721371031339681", false},
    {"1557530830277220352159", false},
    {"2352421192008418247307", false},
    {"1165684210713817259623", false},
    {"833097274976403701255", false},
    {"3335299066092913331751", false},
};

// Record-instance ground truth.
inline constexpr std::uint64_t kRecordNLo = 620651;
inline constexpr std::uint64_t kRecordNHi = 1749283;
inline constexpr std::uint64_t kRecordDistinctPrimes = 38639;
inline constexpr std::uint64_t kRecordFirstPrimeN = 620704;
inline constexpr std::uint64_t kRecordLastPrimeN = 1749275;
inline constexpr std::uint64_t kRecordFailureN = 1749284;
inline constexpr const char* kRecordFailureP = "182215466740465011809";
inline constexpr std::uint64_t kSubrangeNEnd = 720651;          // primes in [620651, 720651)
inline constexpr std::uint64_t kSubrangePrimeCount = 3519;
inline constexpr const char* kFZero = "182215381147285848449";                     // f(0), composite
inline constexpr const char* kFZeroFermatResidue = "45557439449965992749";        // g^(f(0)-1) mod f(0)
inline constexpr const char* kFirstPrime = "182215381149391186529";                // h(620704)
inline constexpr const char* kFOne = "182215381147325570145";
inline constexpr const char* kFMillion = "182215452868949848449";
inline constexpr const char* kMulmodPow67Fixture = "73786976294838206464";        // (2^67)^2 mod (2^68-1)
// factorization of f(0)-1: 2^7 * 4547 * 313076240425153
inline constexpr std::pair<const char*, std::uint32_t> kFZeroMinus1Factors[] = {
    {"2", 7}, {"4547", 1}, {"313076240425153", 1}};
// factorization of h(620704)-1
inline constexpr std::pair<const char*, std::uint32_t> kFirstPrimeMinus1Factors[] = {
    {"2", 5},
    {"439", 1},
    {"10463", 1},
    {"1239693459547", 1},
};
// factorization of (first failing prime)-1; witness divisor is 431
inline constexpr std::pair<const char*, std::uint32_t> kFailurePMinus1Factors[] = {
    {"2", 5},
    {"431", 1},
    {"12745321", 1},
    {"1036590469", 1},
};

}  // namespace fixtures

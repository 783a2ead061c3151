// Generated by tools/gen_mlf_reference.py; do not edit by hand.
//
// Reference values for the one-parameter Mittag-Leffler function,
// computed at 60 significant digits with two independent methods that
// are cross-checked against each other (see the generator script).
#![allow(dead_code, clippy::excessive_precision)]

/// (z, E_a(z)) samples for alpha = 0.3, z in [-30, 5].
pub const GRID_A03: &[(f64, f64)] = &[
    (-30.0, 0.025182617502927663),
    (-29.824120603015075, 0.025328203354478090),
    (-29.64824120603015, 0.025475481947208414),
    (-29.472361809045225, 0.025624482969756734),
    (-29.2964824120603, 0.025775236808961279),
    (-29.12060301507538, 0.025927774570502084),
    (-28.944723618090453, 0.026082128100279178),
    (-28.768844221105528, 0.026238330006558079),
    (-28.592964824120603, 0.026396413682914969),
    (-28.417085427135678, 0.026556413332015383),
    (-28.241206030150753, 0.026718363990261974),
    (-28.065326633165828, 0.026882301553348621),
    (-27.889447236180906, 0.027048262802759986),
    (-27.71356783919598, 0.027216285433257598),
    (-27.537688442211056, 0.027386408081395523),
    (-27.36180904522613, 0.027558670355110939),
    (-27.185929648241206, 0.027733112864437142),
    (-27.01005025125628, 0.027909777253388965),
    (-26.834170854271356, 0.028088706233073144),
    (-26.65829145728643, 0.028269943616078889),
    (-26.482412060301506, 0.028453534352206741),
    (-26.30653266331658, 0.028639524565596872),
    (-26.13065326633166, 0.028827961593321179),
    (-25.954773869346734, 0.029018894025506939),
    (-25.77889447236181, 0.029212371747063339),
    (-25.603015075376884, 0.029408445981086143),
    (-25.42713567839196, 0.029607169334019681),
    (-25.251256281407034, 0.029808595842659741),
    (-25.075376884422113, 0.030012781023085460),
    (-24.899497487437188, 0.030219781921613221),
    (-24.723618090452263, 0.030429657167870619),
    (-24.547738693467338, 0.030642467030094177),
    (-24.371859296482413, 0.030858273472760185),
    (-24.195979899497488, 0.031077140216664306),
    (-24.020100502512562, 0.031299132801572180),
    (-23.844221105527637, 0.031524318651570239),
    (-23.668341708542712, 0.031752767143253471),
    (-23.492462311557787, 0.031984549676894803),
    (-23.316582914572862, 0.032219739750749269),
    (-23.14070351758794, 0.032458413038655204),
    (-22.964824120603016, 0.032700647471104365),
    (-22.78894472361809, 0.032946523319963129),
    (-22.613065326633166, 0.033196123287038075),
    (-22.43718592964824, 0.033449532596690884),
    (-22.261306532663315, 0.033706839092720160),
    (-22.085427135678394, 0.033968133339741197),
    (-21.90954773869347, 0.034233508729309174),
    (-21.733668341708544, 0.034503061591046550),
    (-21.55778894472362, 0.034776891309052163),
    (-21.381909547738694, 0.035055100443887027),
    (-21.20603015075377, 0.035337794860450941),
    (-21.030150753768844, 0.035625083862084340),
    (-20.85427135678392, 0.035917080331251715),
    (-20.678391959798994, 0.036213900877186395),
    (-20.50251256281407, 0.036515665990901749),
    (-20.326633165829143, 0.036822500208001001),
    (-20.150753768844222, 0.037134532279747067),
    (-19.974874371859297, 0.037451895352885327),
    (-19.798994974874372, 0.037774727158745969),
    (-19.623115577889447, 0.038103170212189324),
    (-19.44723618090452, 0.038437372020996760),
    (-19.2713567839196, 0.038777485306352377),
    (-19.095477386934675, 0.039123668235106659),
    (-18.91959798994975, 0.039476084664562758),
    (-18.743718592964825, 0.039834904400580001),
    (-18.5678391959799, 0.040200303469847067),
    (-18.391959798994975, 0.040572464407240355),
    (-18.21608040201005, 0.040951576559251210),
    (-18.040201005025125, 0.041337836404539615),
    (-17.8643216080402, 0.041731447892752264),
    (-17.688442211055275, 0.042132622802830076),
    (-17.51256281407035, 0.042541581122124998),
    (-17.336683417085425, 0.042958551447749047),
    (-17.160804020100503, 0.043383771411690722),
    (-16.984924623115578, 0.043817488131356324),
    (-16.809045226130653, 0.044259958687326833),
    (-16.633165829145728, 0.044711450630266864),
    (-16.457286432160807, 0.045172242519080857),
    (-16.28140703517588, 0.045642624492585713),
    (-16.105527638190956, 0.046122898877158976),
    (-15.92964824120603, 0.046613380833030311),
    (-15.753768844221106, 0.047114399042111939),
    (-15.577889447236181, 0.047626296440514602),
    (-15.402010050251256, 0.048149430999170395),
    (-15.226130653266331, 0.048684176556286730),
    (-15.050251256281408, 0.049230923705688270),
    (-14.874371859296483, 0.049790080745470660),
    (-14.698492462311558, 0.050362074691794126),
    (-14.522613065326633, 0.050947352363091753),
    (-14.346733668341708, 0.051546381540460494),
    (-14.170854271356784, 0.052159652210549047),
    (-13.99497487437186, 0.052787677897861516),
    (-13.819095477386934, 0.053430997094066255),
    (-13.64321608040201, 0.054090174792644202),
    (-13.467336683417084, 0.054765804138038478),
    (-13.29145728643216, 0.055458508199388545),
    (-13.115577889447238, 0.056168941879958931),
    (-12.939698492462313, 0.056897793974518470),
    (-12.763819095477388, 0.057645789388206091),
    (-12.587939698492463, 0.058413691531852447),
    (-12.412060301507537, 0.059202304910331552),
    (-12.236180904522612, 0.060012477922318542),
    (-12.060301507537687, 0.060845105891854206),
    (-11.884422110552762, 0.061701134354395881),
    (-11.70854271356784, 0.062581562622603278),
    (-11.532663316582916, 0.063487447660008680),
    (-11.35678391959799, 0.064419908294001225),
    (-11.180904522613066, 0.065380129803272300),
    (-11.00502512562814, 0.066369368919086313),
    (-10.829145728643216, 0.067388959284536846),
    (-10.65326633165829, 0.068440317421409834),
    (-10.477386934673365, 0.069524949260508180),
    (-10.301507537688444, 0.070644457298418392),
    (-10.125628140703519, 0.071800548451864299),
    (-9.949748743718594, 0.072995042690165135),
    (-9.773869346733669, 0.074229882537099191),
    (-9.597989949748744, 0.075507143545906266),
    (-9.422110552763819, 0.076829045865530057),
    (-9.246231155778894, 0.078197967032843391),
    (-9.070351758793969, 0.079616456144922108),
    (-8.894472361809044, 0.081087249587925166),
    (-8.718592964824122, 0.082613288525386189),
    (-8.542713567839197, 0.084197738379434336),
    (-8.366834170854272, 0.085844010574497394),
    (-8.190954773869347, 0.087555786855443319),
    (-8.015075376884422, 0.089337046542156401),
    (-7.839195979899497, 0.091192097141781803),
    (-7.663316582914572, 0.093125608810217525),
    (-7.487437185929647, 0.095142653238245649),
    (-7.311557788944725, 0.097248747637895011),
    (-7.1356783919598, 0.099449904624846123),
    (-6.959798994974875, 0.10175268893745805),
    (-6.78391959798995, 0.10416428210800524),
    (-6.608040201005025, 0.10669255641411921),
    (-6.4321608040201, 0.10934615969731330),
    (-6.256281407035175, 0.11213461295236987),
    (-6.08040201005025, 0.11506842298106284),
    (-5.904522613065328, 0.11815921288517701),
    (-5.728643216080403, 0.12141987377165940),
    (-5.552763819095478, 0.12486474178900521),
    (-5.376884422110553, 0.12850980555057841),
    (-5.201005025125628, 0.13237295018278323),
    (-5.025125628140703, 0.13647424573727024),
    (-4.849246231155778, 0.14083628962488682),
    (-4.673366834170853, 0.14548461519724400),
    (-4.497487437185928, 0.15044818179944133),
    (-4.321608040201006, 0.15575996579115701),
    (-4.145728643216081, 0.16145767752380634),
    (-3.9698492462311563, 0.16758463654456043),
    (-3.7939698492462313, 0.17419084704454048),
    (-3.618090452261306, 0.18133432873443437),
    (-3.442211055276381, 0.18908277629397679),
    (-3.266331658291456, 0.19751564531204594),
    (-3.090452261306531, 0.20672679718115322),
    (-2.9145728643216096, 0.21682788418184030),
    (-2.7386934673366845, 0.22795272574957876),
    (-2.5628140703517595, 0.24026302809723231),
    (-2.3869346733668344, 0.25395594835964941),
    (-2.2110552763819094, 0.26927422743950275),
    (-2.0351758793969843, 0.28651995549611522),
    (-1.8592964824120592, 0.30607356170208558),
    (-1.6834170854271342, 0.32842045679607866),
    (-1.5075376884422127, 0.35418911507648452),
    (-1.3316582914572876, 0.38420664260231301),
    (-1.1557788944723626, 0.41958174537755054),
    (-0.9798994974874375, 0.46183183391579727),
    (-0.8040201005025125, 0.51308345563430453),
    (-0.6281407035175874, 0.57639886697169448),
    (-0.4522613065326624, 0.65632830962231144),
    (-0.27638190954773734, 0.75988466980952165),
    (-0.10050251256281584, 0.89835028849007619),
    (0.07537688442210921, 1.0908234543733461),
    (0.25125628140703427, 1.3716616556902524),
    (0.4271356783919593, 1.8073881956901961),
    (0.6030150753768844, 2.5388829418325991),
    (0.7788944723618094, 3.8992570904047206),
    (0.9547738693467345, 6.7913658555613845),
    (1.1306532663316595, 14.115526072943120),
    (1.3065326633165846, 37.386997721711970),
    (1.482412060301506, 136.10068987061665),
    (1.6582914572864311, 735.66413304591050),
    (1.8341708542713562, 6355.7551632441169),
    (2.0100502512562812, 94198.702148399690),
    (2.1859296482412063, 2570550.3655637677),
    (2.3618090452261313, 138836443.75373368),
    (2.5376884422110564, 15984356069.862881),
    (2.7135678391959814, 4232803689117.4594),
    (2.8894472361809065, 2786776843507511.9),
    (3.0653266331658315, 4.9391939861776416e+18),
    (3.2412060301507566, 2.5558604948688094e+22),
    (3.4170854271356816, 4.1944392714081057e+26),
    (3.5929648241205996, 2.3749320231260978e+31),
    (3.7688442211055246, 5.0546057354078760e+36),
    (3.9447236180904497, 4.4117732677460723e+42),
    (4.120603015075375, 1.7252548461760048e+49),
    (4.2964824120603, 3.3067966635978692e+56),
    (4.472361809045225, 3.4027886956148571e+64),
    (4.64824120603015, 2.0617620514238094e+73),
    (4.824120603015075, 8.0770048777689918e+82),
    (5.0, 2.2491502775547119e+93),
];

/// (z, E_a(z)) samples for alpha = 0.7, z in [-30, 5].
pub const GRID_A07: &[(f64, f64)] = &[
    (-30.0, 0.011444251527526972),
    (-29.824120603015075, 0.011513548514585146),
    (-29.64824120603015, 0.011583689413197695),
    (-29.472361809045225, 0.011654689725654207),
    (-29.2964824120603, 0.011726565336063134),
    (-29.12060301507538, 0.011799332522172706),
    (-28.944723618090453, 0.011873007967633463),
    (-28.768844221105528, 0.011947608774721748),
    (-28.592964824120603, 0.012023152477544519),
    (-28.417085427135678, 0.012099657055746808),
    (-28.241206030150753, 0.012177140948744305),
    (-28.065326633165828, 0.012255623070504655),
    (-27.889447236180906, 0.012335122824902286),
    (-27.71356783919598, 0.012415660121672908),
    (-27.537688442211056, 0.012497255392995113),
    (-27.36180904522613, 0.012579929610728061),
    (-27.185929648241206, 0.012663704304335663),
    (-27.01005025125628, 0.012748601579529383),
    (-26.834170854271356, 0.012834644137663442),
    (-26.65829145728643, 0.012921855295918078),
    (-26.482412060301506, 0.013010259008308448),
    (-26.30653266331658, 0.013099879887558784),
    (-26.13065326633166, 0.013190743227883662),
    (-25.954773869346734, 0.013282875028720529),
    (-25.77889447236181, 0.013376302019460081),
    (-25.603015075376884, 0.013471051685223794),
    (-25.42713567839196, 0.013567152293740616),
    (-25.251256281407034, 0.013664632923377855),
    (-25.075376884422113, 0.013763523492384445),
    (-24.899497487437188, 0.013863854789408170),
    (-24.723618090452263, 0.013965658505351962),
    (-24.547738693467338, 0.014068967266638308),
    (-24.371859296482413, 0.014173814669954815),
    (-24.195979899497488, 0.014280235318558375),
    (-24.020100502512562, 0.014388264860220027),
    (-23.844221105527637, 0.014497940026897583),
    (-23.668341708542712, 0.014609298676228411),
    (-23.492462311557787, 0.014722379834940411),
    (-23.316582914572862, 0.014837223744285372),
    (-23.14070351758794, 0.014953871907605304),
    (-22.964824120603016, 0.015072367140149416),
    (-22.78894472361809, 0.015192753621266742),
    (-22.613065326633166, 0.015315076949107551),
    (-22.43718592964824, 0.015439384197975142),
    (-22.261306532663315, 0.015565723978478887),
    (-22.085427135678394, 0.015694146500649234),
    (-21.90954773869347, 0.015824703640186029),
    (-21.733668341708544, 0.015957449008022855),
    (-21.55778894472362, 0.016092438023402440),
    (-21.381909547738694, 0.016229727990671302),
    (-21.20603015075377, 0.016369378180016049),
    (-21.030150753768844, 0.016511449912379058),
    (-20.85427135678392, 0.016656006648807735),
    (-20.678391959798994, 0.016803114084509380),
    (-20.50251256281407, 0.016952840247902885),
    (-20.326633165829143, 0.017105255604979216),
    (-20.150753768844222, 0.017260433169305087),
    (-19.974874371859297, 0.017418448618028471),
    (-19.798994974874372, 0.017579380414270777),
    (-19.623115577889447, 0.017743309936319047),
    (-19.44723618090452, 0.017910321614062210),
    (-19.2713567839196, 0.018080503073148871),
    (-19.095477386934675, 0.018253945287380370),
    (-18.91959798994975, 0.018430742739892104),
    (-18.743718592964825, 0.018610993593719026),
    (-18.5678391959799, 0.018794799872387599),
    (-18.391959798994975, 0.018982267651227213),
    (-18.21608040201005, 0.019173507260149196),
    (-18.040201005025125, 0.019368633498701683),
    (-17.8643216080402, 0.019567765864274237),
    (-17.688442211055275, 0.019771028794397740),
    (-17.51256281407035, 0.019978551924163413),
    (-17.336683417085425, 0.020190470359870452),
    (-17.160804020100503, 0.020406924970105592),
    (-16.984924623115578, 0.020628062695560675),
    (-16.809045226130653, 0.020854036879006968),
    (-16.633165829145728, 0.021085007616968874),
    (-16.457286432160807, 0.021321142134775534),
    (-16.28140703517588, 0.021562615186818532),
    (-16.105527638190956, 0.021809609484008497),
    (-15.92964824120603, 0.022062316150605134),
    (-15.753768844221106, 0.022320935212795298),
    (-15.577889447236181, 0.022585676121615148),
    (-15.402010050251256, 0.022856758313056803),
    (-15.226130653266331, 0.023134411808470852),
    (-15.050251256281408, 0.023418877858675916),
    (-14.874371859296483, 0.023710409635519313),
    (-14.698492462311558, 0.024009272975002453),
    (-14.522613065326633, 0.024315747176495658),
    (-14.346733668341708, 0.024630125863024563),
    (-14.170854271356784, 0.024952717908120400),
    (-13.99497487437186, 0.025283848435295687),
    (-13.819095477386934, 0.025623859896843004),
    (-13.64321608040201, 0.025973113239366567),
    (-13.467336683417084, 0.026331989164253924),
    (-13.29145728643216, 0.026700889492190364),
    (-13.115577889447238, 0.027080238641824454),
    (-12.939698492462313, 0.027470485233825149),
    (-12.763819095477388, 0.027872103832846495),
    (-12.587939698492463, 0.028285596841356116),
    (-12.412060301507537, 0.028711496560911203),
    (-12.236180904522612, 0.029150367438309000),
    (-12.060301507537687, 0.029602808516128998),
    (-11.884422110552762, 0.030069456109558665),
    (-11.70854271356784, 0.030550986734096689),
    (-11.532663316582916, 0.031048120311808158),
    (-11.35678391959799, 0.031561623687323629),
    (-11.180904522613066, 0.032092314488799041),
    (-11.00502512562814, 0.032641065373666419),
    (-10.829145728643216, 0.033208808704303773),
    (-10.65326633165829, 0.033796541704849613),
    (-10.477386934673365, 0.034405332157417964),
    (-10.301507537688444, 0.035036324704093557),
    (-10.125628140703519, 0.035690747830494129),
    (-9.949748743718594, 0.036369921617603766),
    (-9.773869346733669, 0.037075266361279985),
    (-9.597989949748744, 0.037808312173640944),
    (-9.422110552763819, 0.038570709697839538),
    (-9.246231155778894, 0.039364242087997302),
    (-9.070351758793969, 0.040190838429871376),
    (-8.894472361809044, 0.041052588805850242),
    (-8.718592964824122, 0.041951761240954677),
    (-8.542713567839197, 0.042890820805678224),
    (-8.366834170854272, 0.043872451197981244),
    (-8.190954773869347, 0.044899579182082537),
    (-8.015075376884422, 0.045975402327748342),
    (-7.839195979899497, 0.047103420572879691),
    (-7.663316582914572, 0.048287472227213038),
    (-7.487437185929647, 0.049531775149440032),
    (-7.311557788944725, 0.050840973968462522),
    (-7.1356783919598, 0.052220194387385613),
    (-6.959798994974875, 0.053675105813190785),
    (-6.78391959798995, 0.055211993804616787),
    (-6.608040201005025, 0.056837844136725685),
    (-6.4321608040201, 0.058560440657069651),
    (-6.256281407035175, 0.060388479573300742),
    (-6.08040201005025, 0.062331703388523729),
    (-5.904522613065328, 0.064401058418294997),
    (-5.728643216080403, 0.066608880720139757),
    (-5.552763819095478, 0.068969116392333925),
    (-5.376884422110553, 0.071497583617971473),
    (-5.201005025125628, 0.074212285627337652),
    (-5.025125628140703, 0.077133786037108272),
    (-4.849246231155778, 0.080285660945062168),
    (-4.673366834170853, 0.083695045907618695),
    (-4.497487437185928, 0.087393300762741103),
    (-4.321608040201006, 0.091416821528124450),
    (-4.145728643216081, 0.095808036768922967),
    (-3.9698492462311563, 0.10061663651892530),
    (-3.7939698492462313, 0.10590109590783379),
    (-3.618090452261306, 0.11173057426113478),
    (-3.442211055276381, 0.11818729519867326),
    (-3.266331658291456, 0.12536954637251071),
    (-3.090452261306531, 0.13339548201881120),
    (-2.9145728643216096, 0.14240797172750184),
    (-2.7386934673366845, 0.15258082075310842),
    (-2.5628140703517595, 0.16412679925575108),
    (-2.3869346733668344, 0.17730807206257657),
    (-2.2110552763819094, 0.19244983397369527),
    (-2.0351758793969843, 0.20995825281960292),
    (-1.8592964824120592, 0.23034423876499882),
    (-1.6834170854271342, 0.25425514502543222),
    (-1.5075376884422127, 0.28251733701716296),
    (-1.3316582914572876, 0.31619375373352763),
    (-1.1557788944723626, 0.35666228875827369),
    (-0.9798994974874375, 0.40572327911043381),
    (-0.8040201005025125, 0.46574796682122236),
    (-0.6281407035175874, 0.53988502945042422),
    (-0.4522613065326624, 0.63234997522961269),
    (-0.27638190954773734, 0.74883360211353978),
    (-0.10050251256281584, 0.89708271631810198),
    (0.07537688442210921, 1.0877317977087559),
    (0.25125628140703427, 1.3355027744324238),
    (0.4271356783919593, 1.6609485062135549),
    (0.6030150753768844, 2.0930048906146405),
    (0.7788944723618094, 2.6727538730002889),
    (0.9547738693467345, 3.4590122353073366),
    (1.1306532663316595, 4.5366921157036017),
    (1.3065326633165846, 6.0293980148246159),
    (1.482412060301506, 8.1185430630235847),
    (1.6582914572864311, 11.072565094687541),
    (1.8341708542713562, 15.291894626411709),
    (2.0100502512562812, 21.378653752023769),
    (2.1859296482412063, 30.245440519412643),
    (2.3618090452261313, 43.286291603568461),
    (2.5376884422110564, 62.647206037838273),
    (2.7135678391959814, 91.657121312153351),
    (2.8894472361809065, 135.51913708314834),
    (3.0653266331658315, 202.42654328463500),
    (3.2412060301507566, 305.37664696831664),
    (3.4170854271356816, 465.13801862921168),
    (3.5929648241205996, 715.13612974391212),
    (3.7688442211055246, 1109.5493713467869),
    (3.9447236180904497, 1736.8104021114203),
    (4.120603015075375, 2742.2635985354605),
    (4.2964824120603, 4366.4251658976132),
    (4.472361809045225, 7009.9895119540814),
    (4.64824120603015, 11344.954727861293),
    (4.824120603015075, 18505.736858995070),
    (5.0, 30419.819802049465),
];

/// (alpha, z, E_a(z)) for deeply negative arguments.
pub const DEEP_NEGATIVE: &[(f64, f64, f64)] = &[
    (0.3, -35.0, 0.021645489190004629),
    (0.3, -40.0, 0.018979521266478697),
    (0.3, -45.0, 0.016898190970577577),
    (0.3, -60.0, 0.012714990320585849),
    (0.3, -100.0, 0.0076588562222866414),
    (0.3, -300.0, 0.0025629387026455551),
    (0.3, -1000.0, 0.00076993246495257768),
    (0.7, -35.0, 0.0097720879197626550),
    (0.7, -40.0, 0.0085261702309107431),
    (0.7, -45.0, 0.0075619735636609235),
    (0.7, -60.0, 0.0056462751668804206),
    (0.7, -100.0, 0.0033696874163059938),
    (0.7, -300.0, 0.0011172307483615783),
    (0.7, -1000.0, 0.00033454145717409955),
];

/// (alpha, z, E_a(z)) for additional alpha values.
pub const EXTRA_ALPHAS: &[(f64, f64, f64)] = &[
    (0.5, -0.5, 0.61569034419292587),
    (0.5, -2.0, 0.25539567631050574),
    (0.5, -10.0, 0.056140992743822586),
    (0.5, -25.0, 0.022549572432641359),
    (0.95, -1.0, 0.37157362003067881),
    (0.95, -5.0, 0.021268437291731109),
    (0.95, -15.0, 0.0039444851648296764),
    (0.95, -30.0, 0.0018277746789235501),
    (0.99, -1.0, 0.36854831806033962),
    (0.99, -5.0, 0.0097680921391741255),
    (0.99, -15.0, 0.00078316696851676136),
    (0.99, -30.0, 0.00035975605168217208),
    (0.1, -0.5, 0.65432446028800193),
    (0.1, -1.0, 0.48556446431108210),
];

/// E_{0.3}(-1.5 * 7^{0.3}), the terminal decay factor of the linear
/// benchmark problem on [0, 7].
pub const EX2_DECAY_FACTOR: f64 = 0.23129030249842627;

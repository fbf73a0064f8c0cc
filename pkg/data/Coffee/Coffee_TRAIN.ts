@problemName Coffee
@timeStamps false
@missing false
@univariate true
@equalLength true
@seriesLength 286
@classLabel true 0 1
@data
-0.51841899,-0.48588363,-0.50500747,-0.56018294,-0.63629941,-0.75322902,-0.82722915,-0.85976467,-0.90632072,-0.92379648,-0.93321222,-0.93442926,-0.92078716,-0.93657191,-0.95599685,-0.95934101,-0.96940599,-0.9824055,-0.97659952,-0.96252576,-0.97031893,-0.98199237,-0.9874616,-1.0152202,-1.0480611,-1.0592421,-1.0498854,-1.0467321,-1.0643986,-1.0877935,-1.0993351,-1.0850813,-1.0641912,-1.0545229,-1.044503,-1.0236367,-0.99421712,-0.96371982,-0.92237217,-0.86616903,-0.81351574,-0.77266759,-0.72343976,-0.66424331,-0.63424598,-0.6280451,-0.60469363,-0.56829781,-0.53778323,-0.50569966,-0.4612259,-0.38892741,-0.29296669,-0.20056328,-0.090999931,0.0084190471,0.082658143,0.22029375,0.34217234,0.42883427,0.55487916,0.54987503,0.51045674,0.60485004,0.6628724,0.64908008,0.70823327,0.79018805,0.86140673,0.9066245,0.99179382,1.0739758,1.0479147,1.0612876,1.0357806,0.96001308,0.89669581,0.78296885,0.73898713,0.73807388,0.78617673,0.7996705,0.7592426,0.70871026,0.63221283,0.63678196,0.63336569,0.63591783,0.66037969,0.68449957,0.679707,0.6353288,0.60739885,0.60318089,0.51534708,0.44636312,0.44976719,0.42765431,0.36126765,0.31869552,0.29465455,0.23049152,0.21593633,0.20237126,0.21164516,0.2375017,0.20308579,0.18274348,0.20487522,0.23673899,0.31383021,0.38322175,0.40506666,0.43961046,0.48577001,0.53359792,0.56159823,0.60313034,0.64741013,0.64071562,0.67863259,0.7238296,0.71367778,0.73546405,0.69066321,0.632419,0.56722941,0.51244061,0.4748466,0.43247746,0.40443785,0.33903466,0.26204866,0.22305982,0.24140717,0.24035557,0.20729773,0.21281292,0.24948685,0.25620973,0.26658356,0.33899868,0.44332037,0.54020464,0.63521042,0.70826639,0.76582523,0.87434538,0.88325623,0.84631813,0.9807682,1.046898,1.040239,1.0373778,1.0324659,1.032877,1.0432058,1.0251688,0.9572421,0.9823372,0.93526851,0.84303862,0.76011212,0.72102534,0.6747341,0.61629687,0.60648544,0.59670174,0.48259033,0.32463397,0.20111206,0.1009692,-0.034165135,-0.15944208,-0.24965229,-0.31928105,-0.34077004,-0.35730736,-0.35495236,-0.34208185,-0.342095,-0.28669973,-0.22090321,-0.18784982,-0.14036721,-0.085618493,-0.09316192,-0.11884304,-0.1480344,-0.13473365,-0.038413047,0.037040077,0.13759084,0.26453012,0.39180314,0.50227737,0.55452482,0.62484657,0.71932402,0.9026986,1.0301155,1.1143873,1.2580638,1.398263,1.4946701,1.5866569,1.6391971,1.7010214,1.7720688,1.8022991,1.6637242,1.5481869,1.5057579,1.408008,1.4124569,1.467514,1.5188524,1.533485,1.469025,1.6630346,1.6795213,1.5245938,1.3500752,1.1753579,1.0088755,0.9080989,0.90521381,0.94613043,0.96435243,1.0245697,1.2284163,1.3153384,1.3734245,1.3545781,1.0694367,0.75064171,0.4867503,0.23820768,-0.015332082,-0.24774734,-0.45842687,-0.60725068,-0.77932422,-0.90835007,-1.0187557,-1.084125,-1.1038269,-1.100227,-1.0962133,-1.0927827,-1.0827159,-1.0938413,-1.148036,-1.2375491,-1.3471144,-1.4815614,-1.5935833,-1.6870365,-1.7516247,-1.7943041,-1.8241779,-1.8432856,-1.8566563,-1.8665025,-1.8752712,-1.8818505,-1.887185,-1.8920667,-1.8968985,-1.9005997,-1.9043497,-1.9077444,-1.9099115,-1.9127192,-1.9163279,-1.9181929,-1.9201246,-1.9223129,-1.9242122,-1.9269965,-1.9287208,-1.9300262,-1.9323014,-1.9336308,-1.9349635,-1.9360067:0
-0.54846169,-0.53368082,-0.51472295,-0.55925554,-0.62680612,-0.72728361,-0.79633935,-0.82955226,-0.86309142,-0.85818148,-0.85428819,-0.8542488,-0.85245819,-0.89271787,-0.92984392,-0.94271557,-0.96331925,-0.97768231,-0.97121953,-0.95016586,-0.95354794,-0.99647607,-1.0082791,-1.0023866,-1.0243972,-1.0403471,-1.0285664,-0.99147207,-0.99760565,-1.0457352,-1.0623889,-1.0516949,-1.0340842,-1.0212878,-1.0140783,-1.0040397,-0.98191267,-0.94186479,-0.88278255,-0.82554537,-0.78309081,-0.72440805,-0.67347183,-0.61660238,-0.54499603,-0.51884157,-0.49441869,-0.48074961,-0.44860289,-0.41588756,-0.43377095,-0.40087449,-0.33471078,-0.26653627,-0.16016155,-0.068833627,0.030156818,0.14947946,0.21055362,0.29476309,0.3786511,0.45044491,0.5100221,0.51633081,0.5504724,0.62427517,0.59903228,0.62397848,0.72704477,0.77313325,0.85044271,0.90173487,0.9526437,0.93172871,0.85569516,0.85475654,0.75876637,0.65699661,0.69353343,0.6814855,0.70163656,0.78303594,0.71807754,0.6502845,0.63171509,0.57755861,0.59502888,0.62554474,0.60776665,0.5959914,0.69369012,0.80348424,0.74384496,0.66727531,0.62878814,0.66019373,0.67702349,0.51682281,0.42013419,0.44012638,0.39959729,0.32809209,0.33811263,0.34277585,0.30797442,0.3102326,0.28920162,0.23976565,0.24655861,0.31859903,0.3617036,0.40853844,0.46171702,0.49528444,0.53167003,0.62291317,0.7098104,0.743478,0.78735414,0.80619023,0.84085002,0.81481963,0.79008882,0.86378335,0.86399143,0.82181981,0.7204552,0.61783083,0.53526292,0.4434922,0.43105636,0.41940453,0.37485448,0.3275967,0.27558699,0.27100768,0.32311931,0.31305589,0.32346313,0.34660662,0.32270477,0.35272142,0.4521563,0.58207627,0.65530148,0.70517665,0.80273275,0.89645197,0.85627108,0.83106158,1.0438482,1.0867006,0.98125754,0.9599744,0.99511147,1.0686506,1.06601,1.0361163,0.97937659,0.90127156,0.87886996,0.94101151,0.91181913,0.79411753,0.71782319,0.71163615,0.73657024,0.6698508,0.57164174,0.44857083,0.27045838,0.14539521,-0.014823582,-0.13756049,-0.21753884,-0.32726781,-0.37416681,-0.3253539,-0.31463632,-0.36414759,-0.36873715,-0.2267363,-0.12805979,-0.092605297,-0.058158063,-0.022929661,-0.052162742,-0.13115675,-0.18413749,-0.17842184,-0.073955903,0.030383781,0.11954039,0.1483393,0.17971707,0.33239086,0.44862735,0.58289061,0.66836376,0.76934177,0.8794377,1.0163035,1.1515495,1.223828,1.2026497,1.2569009,1.4744009,1.5965808,1.53129,1.5782019,1.6063671,1.5882331,1.5399729,1.4829571,1.5913904,1.5541822,1.3807844,1.4989099,1.6552485,1.5513033,1.6624611,1.6082168,1.2767453,0.94204256,0.8412495,0.8829864,0.83385835,0.88982432,0.99392209,1.0367214,1.1741715,1.3470269,1.459763,1.4632813,1.2266192,0.79150222,0.52090924,0.3159812,0.060662421,-0.15094423,-0.43789132,-0.66326798,-0.82993668,-0.96212595,-1.088534,-1.170112,-1.2266547,-1.2542882,-1.2772138,-1.2909504,-1.2984759,-1.3263513,-1.371538,-1.4345484,-1.508736,-1.5991793,-1.6756248,-1.738466,-1.7840411,-1.8152566,-1.8354984,-1.8508874,-1.8647665,-1.8745952,-1.8802099,-1.8848474,-1.8904282,-1.8956879,-1.9003849,-1.9021319,-1.9054828,-1.9090606,-1.9118669,-1.9156172,-1.9187175,-1.9197991,-1.922542,-1.9257786,-1.9286037,-1.9321733,-1.9347479,-1.9357306,-1.9370717,-1.9407273,-1.9437857,-1.9443082:0
-0.47263392,-0.41554604,-0.3599294,-0.43049634,-0.5521319,-0.63162068,-0.73257234,-0.80712043,-0.83723976,-0.85019401,-0.85196445,-0.87200099,-0.89811699,-0.9083046,-0.89120121,-0.88407902,-0.89647653,-0.9021425,-0.90740552,-0.90121095,-0.90061756,-0.9192954,-0.93962113,-0.97651746,-1.0097954,-1.0139757,-1.0058555,-1.0149836,-1.045929,-1.0733367,-1.0714873,-1.0468164,-1.0366613,-1.0307924,-1.0144888,-0.99415527,-0.96097024,-0.92516033,-0.88806801,-0.83999436,-0.80732941,-0.78445698,-0.73812008,-0.68143515,-0.61843946,-0.60401248,-0.61752496,-0.59136095,-0.53030234,-0.46124058,-0.41389883,-0.35599032,-0.30055533,-0.19624379,-0.09074275,0.029952739,0.23113484,0.34483569,0.38607756,0.43568981,0.50224598,0.53968363,0.61366484,0.64003148,0.63845555,0.70767177,0.79180679,0.83790846,0.84673778,0.93130793,0.98438572,1.0583676,1.1459692,1.1713541,1.154566,1.0540989,0.90820367,0.84157986,0.83299915,0.82189406,0.82511544,0.81888341,0.78885389,0.75741198,0.70521177,0.6545998,0.61260047,0.63570136,0.70300728,0.70133315,0.66718479,0.60967896,0.55180224,0.52278651,0.53754731,0.51734345,0.45930591,0.43170704,0.4375249,0.38900123,0.2880274,0.24856151,0.21324233,0.18583769,0.21130484,0.27382211,0.25758466,0.16015534,0.14451994,0.19486531,0.28785805,0.38587277,0.41616037,0.43559459,0.45429014,0.46355961,0.51846355,0.5864159,0.6019458,0.64767862,0.66179923,0.6273798,0.64343831,0.67146162,0.69968378,0.66748264,0.56697288,0.49461765,0.44196797,0.39316647,0.36907872,0.33538876,0.29232276,0.2370298,0.20268761,0.25281751,0.25437666,0.20265961,0.19551172,0.21932625,0.25530104,0.27202286,0.38316011,0.53962925,0.62271261,0.73913479,0.8713141,0.90501813,0.88876404,0.88977647,1.0012632,1.0839288,1.0663648,1.0923872,1.0684638,1.0240022,1.0578957,1.0611455,1.0399073,0.96850508,0.83970149,0.77480213,0.72184284,0.66762426,0.64494417,0.60199868,0.56653126,0.49537119,0.38994915,0.33738968,0.2241682,0.094682343,-0.042346769,-0.16649183,-0.29160861,-0.37002112,-0.36647429,-0.37009172,-0.37858641,-0.36530131,-0.37797787,-0.31348524,-0.24838245,-0.24243961,-0.22057866,-0.1749834,-0.17946204,-0.20658601,-0.21964671,-0.21923944,-0.11562881,-0.026979858,0.058271467,0.1471643,0.22625149,0.33621602,0.43737977,0.59571227,0.72179333,0.94002864,1.1146378,1.1557776,1.1887976,1.3277325,1.4211412,1.5242969,1.668798,1.7295198,1.8017098,1.86089,1.7860929,1.5477396,1.4122075,1.4147878,1.4357519,1.5529586,1.6099687,1.7299962,1.656128,1.5945443,1.6569526,1.5728455,1.4071127,1.0776628,0.90754697,0.8761639,0.79341545,0.71829236,0.78796807,0.91928252,1.0927747,1.261244,1.3039532,1.2005761,0.93950653,0.65318849,0.41482655,0.18550671,-0.060610842,-0.25804498,-0.43530732,-0.60608185,-0.76883537,-0.88465158,-0.98311632,-1.0517926,-1.0842147,-1.0631545,-1.0377205,-1.0146564,-0.9943844,-1.0085935,-1.064991,-1.1585973,-1.2796043,-1.4387757,-1.5678682,-1.681495,-1.7628956,-1.8154152,-1.8526929,-1.876197,-1.8939124,-1.9071039,-1.9171784,-1.9234337,-1.9306779,-1.938138,-1.942255,-1.946914,-1.952573,-1.9557942,-1.9580652,-1.9614649,-1.9655034,-1.9676454,-1.9710757,-1.9746,-1.9767878,-1.9796759,-1.9816956,-1.9842153,-1.987586,-1.9891427,-1.9906587,-1.9923005:0
-0.50952091,-0.48421754,-0.47795118,-0.51128686,-0.55858712,-0.65242826,-0.74529837,-0.78735632,-0.8182795,-0.82604987,-0.83002289,-0.83981558,-0.83737684,-0.83190298,-0.88456876,-0.92592265,-0.92660824,-0.91387106,-0.91882562,-0.92658462,-0.92561501,-0.94510965,-0.975654,-1.0095638,-1.0288078,-1.0214263,-1.0203116,-1.0155284,-1.0067394,-1.0244057,-1.0365524,-1.0396432,-1.0435909,-1.0413333,-1.018699,-0.98876267,-0.95553807,-0.91127598,-0.86384704,-0.83011309,-0.78842488,-0.74428152,-0.67757944,-0.57950059,-0.52163503,-0.49553588,-0.50804282,-0.51776794,-0.50485726,-0.4764006,-0.40920677,-0.33294629,-0.28425857,-0.21482945,-0.15543551,-0.09111685,0.055138622,0.13980652,0.20204841,0.32243323,0.39749068,0.40327765,0.37738786,0.46163256,0.54276102,0.59916565,0.68404881,0.66790776,0.65378411,0.77372932,0.85246079,0.84717815,0.87616231,0.83438849,0.83558562,0.8174639,0.78314724,0.73463706,0.73598429,0.76153145,0.73993644,0.72534694,0.69600889,0.609605,0.52368007,0.53590877,0.54198261,0.52875292,0.5798151,0.64199271,0.65422141,0.64910002,0.6559093,0.64901037,0.53164023,0.41110728,0.42779343,0.48739138,0.47993368,0.3938593,0.33535156,0.24254453,0.19622296,0.22000614,0.20667084,0.2116359,0.20440789,0.23278267,0.23841965,0.23953795,0.27083185,0.33897398,0.42072002,0.45588407,0.49014684,0.5320771,0.58039508,0.60643257,0.64126536,0.71476131,0.81472877,0.83925964,0.80901483,0.81501291,0.78254091,0.71255456,0.64339876,0.5555534,0.49357979,0.45210138,0.37895845,0.35284257,0.31134458,0.27534681,0.27280158,0.20496032,0.20959357,0.24333256,0.20880653,0.21112742,0.27366526,0.32833488,0.37766468,0.48318177,0.59984588,0.70975777,0.80702553,0.93531387,0.94312907,0.86730042,0.98748124,1.0764943,1.0631287,1.0224156,1.031752,1.0712873,1.0397144,1.0240382,0.96383089,0.90106838,0.88175949,0.83535089,0.76591642,0.7002044,0.6767856,0.664299,0.62173804,0.56769059,0.5201098,0.39852557,0.243734,0.13515239,0.0059056895,-0.13614925,-0.25279204,-0.31707757,-0.3229461,-0.31931832,-0.33348144,-0.34437526,-0.33336949,-0.26460387,-0.20696987,-0.19109164,-0.14710506,-0.09044176,-0.11817206,-0.13418804,-0.1397521,-0.1217138,-0.044881427,0.021836506,0.13367386,0.20377129,0.25952882,0.39998737,0.4838492,0.58766473,0.69196786,0.86074172,0.99117341,1.0916063,1.1864525,1.2890088,1.411187,1.4794606,1.5226664,1.6995985,1.7199415,1.6748996,1.8250376,1.8745799,1.6971177,1.5589591,1.5557025,1.6021545,1.6375261,1.5871015,1.6555939,1.73021,1.7558736,1.782056,1.5260409,1.2042742,1.0367038,0.90827681,0.86735115,0.94741663,0.9859429,1.0073086,1.1243016,1.3995338,1.4713169,1.3150127,0.97390728,0.72090764,0.52875019,0.28194629,0.042995964,-0.21383895,-0.4515634,-0.63206448,-0.80335689,-0.93271871,-1.0460192,-1.1135156,-1.1742908,-1.199461,-1.1925887,-1.1929684,-1.2003006,-1.2198764,-1.2647619,-1.3348236,-1.4234637,-1.5376151,-1.6326975,-1.7135694,-1.7686219,-1.803941,-1.8311562,-1.8485211,-1.8616275,-1.8713096,-1.8805613,-1.8884902,-1.8951934,-1.8996327,-1.9040938,-1.9088548,-1.9118451,-1.914698,-1.9177236,-1.9221802,-1.9250081,-1.9275616,-1.9308694,-1.9331977,-1.9373284,-1.9412412,-1.9439849,-1.9457617,-1.9476127,-1.9501716,-1.9517476,-1.9529217:0
-0.56342677,-0.53389622,-0.5438216,-0.59824625,-0.69025962,-0.79438396,-0.88414007,-0.92396995,-0.93950366,-0.95351568,-0.9589398,-0.98632095,-0.98852591,-0.97580926,-0.98546957,-0.98883899,-0.9992518,-1.0026849,-0.98385173,-0.98491965,-1.0018161,-1.0087719,-1.0231687,-1.0460031,-1.0731982,-1.0812533,-1.0686455,-1.0779797,-1.0953768,-1.1065693,-1.1134956,-1.1006994,-1.0812791,-1.0832293,-1.0728334,-1.0399594,-1.0244742,-0.98892106,-0.93060879,-0.87991233,-0.83701887,-0.80609304,-0.74890568,-0.67556525,-0.62795103,-0.60985369,-0.60201124,-0.58620909,-0.55438029,-0.51125674,-0.4723705,-0.40496302,-0.3010493,-0.1937526,-0.085304588,0.055368189,0.1917122,0.31195279,0.44437909,0.51485688,0.51897166,0.59475632,0.6644069,0.66869265,0.75224463,0.79140439,0.78946817,0.88634636,0.9284857,0.96156082,1.1246862,1.1699644,1.0707192,1.146852,1.1412046,1.0551498,0.95821627,0.76428903,0.68666591,0.75272399,0.87620107,0.86580928,0.82613212,0.71003851,0.60399742,0.58003392,0.61711596,0.69039063,0.70960441,0.69691019,0.67385169,0.66641173,0.61743027,0.58992076,0.56476864,0.482495,0.44468606,0.44252249,0.38703329,0.29782547,0.23604752,0.21153197,0.19629778,0.21354037,0.26546287,0.23810486,0.1651238,0.16759016,0.18157772,0.23047487,0.32972624,0.37468988,0.41328933,0.4817264,0.51810101,0.58629188,0.66488902,0.6633189,0.66539183,0.70593668,0.7277201,0.7377301,0.77023838,0.79203852,0.76812089,0.70627485,0.6505426,0.57432445,0.48769757,0.4759733,0.4169803,0.34130157,0.31315233,0.28906985,0.27029557,0.23519003,0.19789726,0.18794721,0.22293857,0.2817401,0.32906051,0.37555063,0.45803572,0.55255215,0.66325232,0.74515803,0.88230254,1.0037071,0.93159026,0.91802529,1.0081645,1.0441432,1.0659956,1.1104871,1.0897723,1.0626688,1.0849617,1.0131493,0.94977955,0.9653669,0.8533267,0.75702259,0.72466549,0.69777615,0.67765991,0.63457825,0.55045821,0.46256135,0.36021388,0.28236311,0.10943988,-0.039382114,-0.16365501,-0.26841205,-0.34043845,-0.37671784,-0.38155565,-0.41311244,-0.42215749,-0.41793556,-0.39957989,-0.32116574,-0.24976358,-0.18271862,-0.14037732,-0.16205716,-0.16199466,-0.15129539,-0.1828954,-0.1690518,-0.064984655,0.0084755638,0.11353172,0.25310345,0.40980888,0.49199637,0.55589853,0.6785485,0.78007354,0.94534027,1.131611,1.2593728,1.3173874,1.4499491,1.6126803,1.6657988,1.7474009,1.830853,1.7217769,1.7125435,1.6961376,1.5272692,1.4338169,1.359912,1.4476601,1.5674916,1.5378068,1.6079503,1.626103,1.6758771,1.6366599,1.4623056,1.2928533,1.0671394,0.92730839,0.79878339,0.71610644,0.70153634,0.78820329,0.96125671,1.0645719,1.2476239,1.3247336,1.0907386,0.80683504,0.49894198,0.20954885,-0.012323736,-0.21747153,-0.39950964,-0.59589336,-0.74401292,-0.87962065,-0.98484176,-1.0801923,-1.1321557,-1.146214,-1.1274517,-1.106697,-1.0934718,-1.0659397,-1.0620226,-1.1041129,-1.1868495,-1.3000841,-1.4376597,-1.5471993,-1.6386998,-1.7010534,-1.741306,-1.7700111,-1.7882323,-1.8009765,-1.8095021,-1.8156862,-1.8220923,-1.8287297,-1.8330664,-1.8355009,-1.8384494,-1.8419489,-1.8440295,-1.8461902,-1.8491015,-1.8513284,-1.8530087,-1.8558202,-1.8578697,-1.8591976,-1.8610028,-1.863121,-1.865041,-1.8661225,-1.8669447,-1.8684191,-1.8695715:0
-0.44148543,-0.44936588,-0.44454026,-0.49762005,-0.58064202,-0.64905496,-0.74259774,-0.81046908,-0.82545751,-0.83678627,-0.86241533,-0.84408514,-0.82226877,-0.84541316,-0.89702358,-0.93829944,-0.95890535,-0.95632317,-0.94416667,-0.95401052,-0.96120551,-0.98570315,-1.0155339,-1.0215018,-1.027604,-1.031263,-1.0110437,-0.99653177,-1.0053108,-1.0247495,-1.041086,-1.0455284,-1.0402712,-1.02274,-0.99541616,-0.96538883,-0.94188723,-0.90690277,-0.86480662,-0.80965821,-0.71577615,-0.66484814,-0.60487478,-0.53243314,-0.48357534,-0.42462074,-0.39651271,-0.41006007,-0.41013114,-0.37462289,-0.36526045,-0.3354547,-0.26767608,-0.22047893,-0.087451139,0.045841542,0.048068106,0.11588485,0.26274773,0.34265828,0.39618349,0.46838189,0.51847871,0.55241877,0.44085013,0.47279968,0.5977552,0.60700791,0.64271091,0.75693772,0.87283182,0.84753951,0.82982504,0.81202036,0.88092482,0.89013342,0.79245567,0.7801909,0.7215283,0.67254442,0.62908784,0.71445061,0.83314848,0.78404624,0.68988229,0.60994172,0.63182584,0.62571285,0.58245526,0.64992277,0.74696859,0.77693402,0.77737067,0.73834303,0.65349369,0.62086877,0.62291573,0.60460174,0.5431116,0.50983934,0.46769789,0.36629285,0.31899846,0.33282983,0.35439991,0.35385486,0.32030775,0.29262256,0.29374149,0.29711355,0.36156116,0.46143306,0.49296363,0.49854525,0.51530791,0.54920306,0.6128398,0.70846608,0.74353463,0.70970311,0.77011165,0.82161939,0.82093871,0.87490548,0.84359995,0.78864616,0.71644895,0.64685213,0.61479657,0.54229874,0.50287443,0.46449454,0.38449127,0.3474823,0.34445988,0.31845912,0.31314491,0.32920245,0.32132399,0.30438665,0.29307741,0.36617555,0.46978018,0.50230933,0.54717058,0.63011563,0.71891423,0.77746751,0.75164423,0.70121304,0.80765332,0.94918154,0.99774085,0.99146367,1.0224132,1.0741093,1.0683293,1.053135,1.0061067,0.88681211,0.85573068,0.86060624,0.8356483,0.79001908,0.73633473,0.73237006,0.68993383,0.64503923,0.59200235,0.49284752,0.31318982,0.17527968,0.086398454,-0.020495476,-0.12918065,-0.21652928,-0.23398976,-0.24140632,-0.24109521,-0.22301861,-0.23900095,-0.17970164,-0.11679832,-0.057672491,0.060898247,0.12140364,0.064294351,-0.073976582,-0.14448019,-0.063078229,0.021159109,0.083695785,0.15100866,0.18107252,0.29818253,0.33142609,0.37382619,0.51185854,0.54557688,0.6299638,0.7293855,0.80716061,0.89708757,0.97824549,1.100338,1.15593,1.1869844,1.3362439,1.4167728,1.4076511,1.4739919,1.4893878,1.3862693,1.2725002,1.3172459,1.5061888,1.4158859,1.3907998,1.4873887,1.6425155,1.698308,1.5443096,1.3966105,1.1928853,1.0596306,0.96054271,0.89567971,0.95751617,1.0641257,1.0944062,1.1417386,1.3966608,1.5129621,1.3611637,1.1495048,0.9444153,0.72368087,0.49745037,0.21956587,-0.081968487,-0.33819178,-0.51258775,-0.7172851,-0.87706461,-1.0049598,-1.0965542,-1.1537288,-1.1684633,-1.187211,-1.2013125,-1.1891976,-1.2078202,-1.2634496,-1.3508457,-1.4618626,-1.5914539,-1.7034542,-1.7973122,-1.8627056,-1.9059964,-1.9368895,-1.9583686,-1.9744378,-1.9856151,-1.9947521,-2.0016881,-2.0083848,-2.0149157,-2.0188304,-2.0231834,-2.0265142,-2.0293005,-2.0328671,-2.0355179,-2.0391486,-2.0423481,-2.0445485,-2.0458944,-2.0484175,-2.0530403,-2.0557195,-2.0568855,-2.0598488,-2.0621595,-2.0631785,-2.064161:0
-0.49643764,-0.46567683,-0.4158336,-0.45890541,-0.56657688,-0.6709118,-0.74188335,-0.78550748,-0.83705919,-0.86051453,-0.86578472,-0.86088209,-0.84750436,-0.8619135,-0.89525006,-0.91137879,-0.93397983,-0.95656369,-0.94996085,-0.93479176,-0.92889032,-0.93123635,-0.9627424,-1.0016448,-1.0334067,-1.0405846,-1.0157795,-1.0040009,-1.0232126,-1.0556572,-1.0643172,-1.058576,-1.0424456,-1.0237406,-1.0225609,-1.0028159,-0.96853059,-0.93908649,-0.90904919,-0.85976805,-0.79942284,-0.73902094,-0.67580801,-0.62736709,-0.58701628,-0.55271797,-0.55119314,-0.53023995,-0.48617972,-0.47364456,-0.41485135,-0.32832833,-0.26247752,-0.16837175,-0.07519328,0.031175684,0.16088104,0.28203782,0.33541498,0.40187097,0.49502128,0.50297369,0.50951774,0.59146839,0.66207671,0.65078799,0.72594818,0.83882847,0.99749624,1.0942981,1.0494102,1.1207824,1.1478948,1.1009812,1.0650163,1.0056185,0.8883034,0.74967498,0.69317247,0.72061055,0.74213188,0.82726889,0.86273967,0.70132965,0.62681738,0.56901977,0.60164628,0.64173883,0.60551985,0.67689614,0.70561352,0.67452714,0.67238058,0.6763653,0.60030141,0.56234307,0.57337292,0.50970881,0.47739761,0.42328349,0.32252276,0.27517833,0.26691703,0.26076351,0.25131617,0.24887257,0.21232234,0.19052398,0.21395227,0.26465659,0.33031671,0.36506409,0.4048622,0.44115949,0.52921264,0.62522216,0.65439774,0.73053377,0.76663011,0.77673427,0.79433905,0.81868944,0.81382114,0.80802567,0.81585395,0.73419824,0.60242734,0.53078909,0.53102265,0.47251696,0.39472643,0.32853276,0.30000089,0.2419076,0.17827055,0.19401703,0.17363555,0.18083432,0.19903724,0.18021048,0.23108327,0.29623527,0.36295236,0.50874422,0.64896316,0.71997683,0.79851533,0.87390846,0.86932312,0.86287639,0.99080312,1.0709648,1.031699,1.070264,1.1156003,1.0562424,1.0054937,0.98980789,0.94316388,0.89676824,0.85085515,0.74263814,0.62429523,0.61981524,0.61150392,0.55999432,0.53988493,0.43140942,0.28338047,0.20182147,0.080720026,-0.020080721,-0.14461432,-0.26079708,-0.36172454,-0.45070685,-0.48175876,-0.4628926,-0.47198437,-0.4743483,-0.46841574,-0.38470017,-0.32507588,-0.27118444,-0.18938398,-0.17471226,-0.20116093,-0.27296727,-0.31345863,-0.27941598,-0.19878106,-0.10757723,0.032901703,0.1161635,0.13173485,0.2786095,0.40229028,0.56375118,0.71036621,0.89232617,1.0245964,1.0927111,1.271787,1.479866,1.4956777,1.5913557,1.7157377,1.7274918,1.7993721,1.8397685,1.7201592,1.6345987,1.6508081,1.5555926,1.5424093,1.605982,1.5424823,1.5425361,1.6269854,1.7488272,1.6653469,1.5111724,1.2928814,1.0835097,0.93872007,0.76466498,0.69740458,0.82129681,0.93944124,0.99621991,1.0622391,1.3223629,1.453732,1.3023623,1.0103961,0.67464978,0.38514223,0.11665074,-0.10316541,-0.31237991,-0.52357659,-0.67397281,-0.83761584,-0.96283565,-1.0620271,-1.1262261,-1.1645256,-1.1743749,-1.1703682,-1.1644262,-1.1565572,-1.172509,-1.2201176,-1.2970226,-1.3878974,-1.497278,-1.5909837,-1.6723677,-1.7307068,-1.7686521,-1.7952432,-1.8123101,-1.8267989,-1.8371562,-1.8439241,-1.8503251,-1.8572827,-1.8622347,-1.8649052,-1.8680614,-1.8717957,-1.8736784,-1.8769406,-1.881068,-1.8842128,-1.8867838,-1.888509,-1.8903836,-1.8932553,-1.8960333,-1.8979991,-1.8998945,-1.9022135,-1.9042587,-1.9059171,-1.9067571:0
-0.46057761,-0.36922868,-0.35411628,-0.45859699,-0.54103587,-0.62855279,-0.71531853,-0.75360706,-0.78490742,-0.8004132,-0.82072021,-0.85523832,-0.87438663,-0.8761542,-0.87295477,-0.87529642,-0.90858765,-0.92496252,-0.91628468,-0.90181752,-0.90747598,-0.92489123,-0.94350197,-0.97867827,-0.99850322,-0.99662785,-0.97811091,-0.98473738,-1.0072277,-1.02282,-1.0281203,-1.0242882,-1.0216385,-1.0294237,-1.024061,-0.99140172,-0.95645923,-0.91615894,-0.88228069,-0.83857331,-0.7687254,-0.73880879,-0.70451964,-0.64915843,-0.60102662,-0.56365677,-0.57179515,-0.57279119,-0.55455294,-0.51463848,-0.47658053,-0.4150373,-0.34417139,-0.28294297,-0.2003929,-0.0717465,0.085759423,0.13299142,0.20393226,0.33555721,0.38155463,0.37403428,0.33070679,0.3755307,0.47509482,0.54222508,0.61589138,0.66965996,0.74291132,0.76437151,0.75788816,0.8148001,0.84645502,0.77014451,0.71669883,0.75211084,0.76050743,0.68041653,0.65163127,0.5944277,0.60560608,0.697181,0.64442572,0.57208953,0.50794954,0.50619761,0.51244782,0.51667913,0.5820987,0.60845836,0.57328542,0.56331264,0.5561862,0.51486723,0.47106686,0.43468618,0.43545204,0.4082768,0.35370989,0.30325542,0.21968493,0.18802273,0.23433401,0.25556469,0.22337894,0.19742519,0.15823873,0.16136134,0.17376688,0.20799983,0.32489592,0.42917623,0.43590283,0.42094136,0.49416833,0.58724129,0.5947607,0.58974372,0.67897092,0.70280362,0.7026958,0.7291634,0.77316457,0.79018995,0.7335187,0.65811192,0.60769869,0.58826051,0.50485146,0.42257779,0.40864767,0.3599167,0.2719428,0.2675084,0.30898046,0.29363477,0.2512788,0.24583516,0.24736755,0.26410238,0.28270355,0.31944351,0.40090778,0.52223719,0.65135999,0.75324811,0.77624069,0.75146747,0.76395091,0.82598279,0.973724,1.0525787,1.087989,1.0573151,1.0033166,1.0377512,1.0810482,1.1172427,1.0873835,0.97911886,0.95119528,0.90341817,0.79700953,0.66139961,0.61687031,0.68964299,0.6283352,0.51614102,0.47441426,0.38582206,0.25037562,0.14373114,0.018350468,-0.10279916,-0.19592522,-0.25350424,-0.28729719,-0.30784596,-0.31622489,-0.33131479,-0.34598302,-0.30904266,-0.22471843,-0.1839268,-0.17382262,-0.10898293,-0.090972434,-0.16535743,-0.20048926,-0.21321082,-0.14576346,-0.00014571965,0.10917125,0.14955401,0.25245623,0.44371926,0.53568446,0.66016154,0.74170465,0.82998797,0.89391409,1.0326472,1.1710058,1.2646268,1.4386844,1.5194286,1.6113656,1.7934299,1.8462339,1.9242722,1.9421959,1.7811148,1.6849676,1.6285573,1.5823634,1.6510831,1.6584261,1.6756774,1.6572002,1.7361114,1.7335744,1.5580353,1.5402515,1.2723141,1.043809,1.0006484,0.80823171,0.88268746,1.0930115,1.0503583,1.1017679,1.4486094,1.5802127,1.3651748,1.1050251,0.80306217,0.5353718,0.37045253,0.11464158,-0.10937253,-0.33880132,-0.51133839,-0.67754291,-0.83063006,-0.96508114,-1.0454271,-1.0738733,-1.0640542,-1.0573054,-1.0416586,-1.0286148,-1.0459909,-1.089641,-1.1809305,-1.3055732,-1.4636424,-1.5892557,-1.695737,-1.7703228,-1.8190284,-1.8549987,-1.8789892,-1.8961946,-1.9066363,-1.9164344,-1.926556,-1.934741,-1.9399105,-1.9439987,-1.9481112,-1.9524431,-1.9571366,-1.9603341,-1.9638049,-1.9681073,-1.9713929,-1.9741156,-1.9771541,-1.9807902,-1.9843966,-1.9874584,-1.9897085,-1.9918831,-1.9940428,-1.9970273,-1.9992659:0
-0.59846394,-0.55997954,-0.56824434,-0.61179261,-0.67044143,-0.74241476,-0.79357026,-0.85663907,-0.89109943,-0.86448291,-0.85796403,-0.86661334,-0.88373158,-0.89834973,-0.93448515,-0.96410959,-0.95956821,-0.97467902,-0.98216635,-0.96478041,-0.96458986,-0.99681571,-1.0221721,-1.0276364,-1.0340038,-1.0157695,-0.98616827,-0.98846028,-0.98855368,-1.0029563,-1.0176878,-1.0145962,-1.0175925,-1.0186352,-1.0142115,-1.0123699,-1.001106,-0.95531141,-0.89808373,-0.83910041,-0.78842229,-0.74921375,-0.67015118,-0.57383326,-0.4978562,-0.42655658,-0.42439078,-0.43686054,-0.3938261,-0.376626,-0.36792197,-0.26779386,-0.18596842,-0.15163149,-0.056883684,0.041565838,0.16263734,0.28312031,0.36540209,0.42151342,0.44549915,0.54662733,0.62585459,0.66255342,0.73404797,0.78304281,0.83174087,0.86216597,0.98091233,0.99730321,0.99409929,1.0973297,1.0535446,1.087836,1.0876312,0.85183144,0.78266268,0.77216945,0.7824359,0.83161497,0.86423356,0.86406482,0.68131594,0.63049729,0.66220834,0.6233421,0.58619901,0.5554548,0.641191,0.74338627,0.70793588,0.71905066,0.69779393,0.62302898,0.59387753,0.5657251,0.5573934,0.51348306,0.48126363,0.44224339,0.3812037,0.2890807,0.2509168,0.2610392,0.28220274,0.31800922,0.29139409,0.25018016,0.22353201,0.25965546,0.3375335,0.44465082,0.46925863,0.49010125,0.538026,0.57380074,0.67486289,0.79793849,0.84069123,0.82656243,0.90887157,0.94479336,0.92619018,0.9353343,0.90163784,0.80473802,0.69210669,0.57980185,0.49970458,0.44262748,0.3818525,0.33339479,0.33041956,0.28950946,0.24317705,0.25427291,0.25787652,0.24478125,0.24853256,0.25838714,0.28681722,0.36592361,0.46200054,0.58852298,0.65964563,0.73460786,0.91293536,1.0344753,0.94029055,0.89580206,1.010473,1.0662304,1.1324848,1.1037101,1.0649801,1.0937458,1.0625809,1.0249705,0.93536155,0.83625564,0.8279933,0.80317164,0.73274086,0.7016956,0.67578249,0.62633058,0.56160039,0.54111568,0.42851995,0.26464826,0.12629972,0.031219234,-0.083444629,-0.22873376,-0.3510801,-0.42020484,-0.44738487,-0.45188244,-0.43213791,-0.45564903,-0.47329381,-0.37060342,-0.28298066,-0.25216377,-0.23723742,-0.2217469,-0.235129,-0.27171231,-0.29941739,-0.32457451,-0.23235063,-0.12436104,-0.065654723,-0.010527868,0.088408869,0.22280925,0.32216491,0.44229244,0.59402662,0.79428732,0.89263265,1.0592731,1.2616952,1.4224049,1.4852851,1.5571543,1.623964,1.693903,1.7509991,1.7573317,1.6339202,1.491994,1.5522505,1.6243057,1.5457246,1.4661066,1.4414061,1.4074748,1.4355752,1.6736605,1.6582366,1.4590843,1.2374598,0.89171005,0.70051021,0.65407809,0.63990366,0.73028481,0.90635983,1.0138132,1.2534032,1.6260184,1.4605748,1.3050873,1.0565459,0.63359958,0.31074246,0.0567303,-0.18853134,-0.40868011,-0.62617095,-0.79439678,-0.94971801,-1.06581,-1.1813423,-1.2521439,-1.3033798,-1.3363377,-1.3576313,-1.3795084,-1.3996843,-1.4228703,-1.4571277,-1.5044282,-1.5568756,-1.6149483,-1.6582734,-1.6955988,-1.7240053,-1.7428848,-1.7565989,-1.766982,-1.7763045,-1.78232,-1.7862533,-1.7896244,-1.7936724,-1.797839,-1.8003457,-1.8015579,-1.8040582,-1.805881,-1.8077892,-1.8110934,-1.813494,-1.8154595,-1.8174667,-1.8192511,-1.8207699,-1.8225752,-1.8252424,-1.8276538,-1.8296781,-1.8303677,-1.8310917,-1.8322841:0
-0.64531855,-0.58438065,-0.59374994,-0.67661657,-0.78263051,-0.88133568,-0.92156383,-0.9647744,-1.0010562,-1.0047256,-1.001553,-0.99157002,-0.99840479,-1.0253321,-1.042357,-1.0367968,-1.0339218,-1.0433602,-1.0385043,-1.0166324,-1.0150649,-1.0226346,-1.0478766,-1.0732192,-1.0760301,-1.0668939,-1.055302,-1.0550901,-1.0738979,-1.1047352,-1.1093125,-1.0902232,-1.0679432,-1.0599476,-1.0558873,-1.0369146,-1.0043686,-0.96769497,-0.91791845,-0.837698,-0.77509589,-0.73766321,-0.68285718,-0.63181923,-0.58658945,-0.53556125,-0.49531624,-0.51223181,-0.53193475,-0.49290542,-0.41273275,-0.30950263,-0.26234516,-0.19359913,-0.059438663,0.012502827,0.11948239,0.29338307,0.43290522,0.4350447,0.37888193,0.45620222,0.54730167,0.62796874,0.70119498,0.65768087,0.70689493,0.82242163,0.836653,0.83439249,0.91779979,1.017055,0.99659569,0.97938127,0.9705856,0.88542094,0.83674844,0.79515949,0.69250869,0.72350532,0.81731026,0.86265017,0.8055944,0.71114955,0.66515846,0.61105875,0.5611404,0.60618843,0.66458636,0.66253028,0.68404152,0.71681452,0.67726239,0.57972208,0.55525174,0.59204236,0.56342816,0.51813008,0.4796219,0.3861741,0.31733391,0.28339897,0.27588083,0.27150732,0.25754642,0.27938427,0.28026181,0.25106487,0.26365497,0.26790959,0.3242797,0.40672264,0.44645309,0.50553541,0.52754563,0.55527075,0.60549276,0.6354571,0.72916294,0.79021136,0.7925962,0.76939084,0.76048934,0.83043824,0.81746184,0.72036942,0.62344049,0.60191911,0.57182549,0.50219356,0.45334489,0.40486871,0.35545453,0.33845924,0.28785004,0.23596939,0.2305873,0.27891305,0.32678824,0.29942471,0.33699806,0.4080259,0.51609909,0.63043584,0.67456742,0.74642374,0.82280667,0.8887107,0.88757449,0.88411123,1.0113578,1.085368,1.0625163,1.0561426,1.05562,1.0756709,1.1023924,1.0984825,1.0019863,0.89232884,0.8386954,0.75981445,0.68737235,0.69110785,0.68433721,0.63300623,0.54629612,0.47768393,0.39752952,0.32666683,0.1911808,0.084649634,-0.034929793,-0.18969317,-0.28890682,-0.35951755,-0.38134691,-0.40491284,-0.39914281,-0.36129544,-0.35948042,-0.25793668,-0.15427691,-0.087988473,-0.034951338,-0.062098657,-0.12462244,-0.14134575,-0.16491726,-0.18151674,-0.062754023,0.0053182594,0.068151161,0.15867585,0.28676819,0.39522604,0.43942289,0.53621912,0.67486576,0.87338089,0.99499346,1.1541047,1.2816508,1.3099388,1.4159586,1.5847472,1.6612085,1.736188,1.7239128,1.7546881,1.7564572,1.5750074,1.493848,1.4751956,1.434648,1.5110891,1.5760604,1.5845039,1.5954975,1.5852403,1.602918,1.4645278,1.1959152,0.99207048,0.83634985,0.72433406,0.65630867,0.79011022,0.94084799,1.0112241,1.1848086,1.4053291,1.3980211,1.2577024,1.0450696,0.74585849,0.48350441,0.23736783,-0.039288086,-0.29094985,-0.50341903,-0.65167983,-0.81246596,-0.94253771,-1.0473717,-1.1039118,-1.1399553,-1.1498306,-1.1492289,-1.1438711,-1.1255873,-1.1462005,-1.2008875,-1.2725627,-1.3646049,-1.4839826,-1.5804996,-1.6620887,-1.7206899,-1.7612711,-1.7907746,-1.8074534,-1.8200956,-1.8296359,-1.8366215,-1.8429292,-1.8483056,-1.8530898,-1.8571045,-1.8602105,-1.8639969,-1.8663233,-1.8686859,-1.8724158,-1.8752407,-1.8762024,-1.8783953,-1.8811832,-1.8840385,-1.8866062,-1.8882599,-1.8899249,-1.8920681,-1.8939811,-1.8961513,-1.897537:0
-0.67298944,-0.65267131,-0.64481298,-0.661405,-0.73685083,-0.82065538,-0.87686634,-0.89894686,-0.90334933,-0.91281119,-0.92419419,-0.91513633,-0.91914448,-0.94678577,-0.97281196,-0.99865083,-1.0111763,-1.0040703,-0.99857012,-1.0072831,-1.015192,-1.0183802,-1.044022,-1.0618625,-1.0563684,-1.0329172,-1.0073371,-0.99511027,-1.000654,-1.0123734,-1.0190877,-1.0256415,-1.0216892,-1.0224733,-1.0228963,-1.0052721,-0.98336185,-0.95900388,-0.91727514,-0.87014762,-0.83120649,-0.77572215,-0.68986917,-0.61452327,-0.5414168,-0.47318972,-0.45138224,-0.42213076,-0.38295572,-0.3831028,-0.37514064,-0.34593207,-0.27139016,-0.17846049,-0.083128976,0.014546242,0.11370303,0.26812205,0.41341383,0.44859661,0.42907212,0.4730414,0.57588839,0.67708695,0.73940574,0.80352094,0.80515826,0.77434071,0.91376857,0.97870832,0.98291492,1.0528849,0.96615403,0.90347515,0.85710604,0.79053296,0.72487627,0.70962052,0.71000339,0.70459282,0.74442443,0.76359606,0.72599253,0.63257849,0.59695492,0.580738,0.53252656,0.52329171,0.5247187,0.56319647,0.63553386,0.65941268,0.58228149,0.49802392,0.46009289,0.4525216,0.47354011,0.42361464,0.35047804,0.30641516,0.24004898,0.19772981,0.210301,0.21310962,0.22811612,0.2283657,0.18810175,0.17064349,0.17283567,0.22129424,0.2774127,0.33810117,0.43046421,0.50707745,0.54843076,0.60114239,0.67323799,0.70778443,0.77459563,0.80309482,0.82156262,0.8659051,0.88828945,0.90690955,0.81390885,0.69890177,0.60524282,0.52239834,0.49040016,0.44831735,0.36893528,0.31804063,0.25846664,0.20120123,0.18440254,0.17991558,0.17401019,0.14438528,0.16321862,0.20831071,0.2423332,0.32046971,0.41725778,0.54107559,0.69586569,0.8044202,0.92517358,0.97591227,0.9389412,0.96828095,1.0713485,1.1958439,1.2064796,1.1228867,1.1060119,1.0912554,1.0597235,1.0224901,0.97125432,0.90630879,0.80271617,0.73807647,0.74889539,0.69579177,0.60970955,0.57115941,0.49414239,0.43839002,0.3796029,0.23654165,0.0819571,-0.040570794,-0.17009122,-0.27882949,-0.37565803,-0.45176511,-0.46953432,-0.46322782,-0.46358546,-0.4725048,-0.47711216,-0.39019972,-0.29732431,-0.25954047,-0.23447901,-0.21454698,-0.24698795,-0.27961535,-0.30239736,-0.27924171,-0.17668409,-0.10880565,-0.0099066644,0.10188969,0.19739319,0.37961502,0.48101412,0.58977729,0.76261431,1.030554,1.1488717,1.2800819,1.536945,1.6866918,1.896871,2.0177648,2.005828,2.0463149,2.0363855,2.135027,2.0971212,1.9216187,1.7591438,1.5477574,1.4735354,1.5630218,1.5914275,1.683029,1.8209296,1.8101485,1.5764729,1.3305255,1.0886993,0.82341317,0.61630453,0.53989662,0.53581199,0.62221059,0.87230964,1.024815,1.0379596,1.2305136,1.3265963,1.1631811,0.85269434,0.50823729,0.22674939,-0.0097626983,-0.25197518,-0.47667393,-0.68030659,-0.8209113,-0.96352442,-1.0720562,-1.1551994,-1.2115904,-1.2582445,-1.2876283,-1.3027343,-1.3123635,-1.3214428,-1.3391493,-1.372338,-1.4182283,-1.4679518,-1.5249236,-1.5720214,-1.6102191,-1.6376846,-1.6564704,-1.6703671,-1.6799169,-1.68711,-1.6932681,-1.6979591,-1.7013147,-1.7056118,-1.7093625,-1.7118675,-1.7128689,-1.7148362,-1.7173738,-1.7189749,-1.7212655,-1.7234175,-1.7241082,-1.7264321,-1.7288238,-1.7307452,-1.7325147,-1.7346096,-1.7364171,-1.7374624,-1.7387751,-1.7402493,-1.7416958:0
-0.61848076,-0.5852446,-0.6319552,-0.69559206,-0.80242563,-0.91243604,-0.97640584,-1.0090595,-1.0179608,-1.0346781,-1.0460234,-1.0385104,-1.0329832,-1.0296575,-1.0216325,-1.0313888,-1.0332896,-1.0074529,-0.99806227,-0.99565617,-1.00999,-1.0285224,-1.0462854,-1.060715,-1.0618594,-1.0633929,-1.0602044,-1.0659913,-1.0815959,-1.0991998,-1.1116353,-1.0762527,-1.0574368,-1.0602817,-1.0296948,-1.022733,-1.0095179,-0.97259016,-0.92600975,-0.87353388,-0.82168691,-0.77158314,-0.72172138,-0.67866957,-0.63495165,-0.6138923,-0.60907267,-0.57787442,-0.55610663,-0.53006563,-0.47312337,-0.36245085,-0.24636664,-0.13881756,0.024172237,0.16803151,0.26016431,0.34552675,0.40723329,0.50245564,0.55276354,0.56721831,0.70507795,0.81432505,0.82693474,0.82118236,0.84300777,0.96029218,1.0446726,1.1057373,1.2237549,1.206256,1.1034718,1.1352421,1.2376344,1.1127709,0.93097096,0.85976767,0.85037476,0.87495598,0.8803153,0.87147861,0.82114995,0.76683755,0.72191122,0.66909522,0.64387356,0.69801082,0.73529644,0.75861049,0.81649999,0.74758996,0.62948006,0.58315842,0.60762806,0.59060527,0.50599087,0.43819125,0.42549233,0.39567627,0.31357773,0.28976359,0.29290426,0.29275833,0.29319977,0.28633961,0.27255311,0.26394565,0.29698111,0.35374673,0.39059787,0.47044068,0.56804883,0.58965346,0.60387856,0.60426375,0.63227797,0.69287765,0.75989958,0.80843449,0.76468383,0.77922977,0.84005684,0.79796358,0.73662477,0.70871781,0.63665376,0.56846381,0.55695539,0.5054246,0.43702265,0.39226279,0.3930916,0.3607963,0.27410154,0.23394189,0.22366004,0.24554615,0.25586897,0.27271901,0.32640227,0.3722625,0.46822934,0.6001585,0.7242386,0.84240225,0.91112629,0.93272328,0.90218156,0.9421235,1.0148069,0.98917126,1.0256625,1.0268632,0.9857701,1.041125,1.0945075,0.99521984,0.89421247,0.84104996,0.74457138,0.7142445,0.6734774,0.64114056,0.62304822,0.57572537,0.48502188,0.42858314,0.35718999,0.24623359,0.086190382,-0.034302356,-0.1548008,-0.29264675,-0.39446136,-0.45399011,-0.47654416,-0.47703866,-0.45229986,-0.45814763,-0.4639242,-0.39559151,-0.30593145,-0.22948922,-0.19748898,-0.20959561,-0.24785106,-0.26298256,-0.28413684,-0.27857854,-0.13635852,-0.071957542,-0.018938332,0.054493069,0.23338578,0.37792143,0.40868405,0.53603604,0.6473223,0.825939,0.97918937,1.165814,1.3500977,1.4879276,1.5303653,1.5074537,1.6248774,1.7879253,1.8939306,1.8404163,1.6606085,1.5137646,1.4134528,1.4065425,1.3581804,1.4341321,1.5045115,1.4393157,1.4105919,1.4706058,1.378234,1.2154315,1.1941361,1.0669153,0.80762519,0.66385081,0.60623823,0.67181635,0.77249295,0.92910557,1.1578428,1.3380429,1.2977409,1.1518998,0.89934359,0.60061284,0.44921531,0.24932509,-0.013148298,-0.26387435,-0.45299666,-0.59423247,-0.77495965,-0.90441048,-1.0044794,-1.0646076,-1.0939009,-1.1073536,-1.1071963,-1.1005293,-1.1054245,-1.1236059,-1.1670907,-1.2446719,-1.3414287,-1.463149,-1.5587734,-1.6404253,-1.6998401,-1.7392656,-1.7670948,-1.7850814,-1.798762,-1.8086015,-1.8158314,-1.8215127,-1.8276237,-1.8320294,-1.8355128,-1.8383013,-1.8405764,-1.8425275,-1.8448918,-1.8477627,-1.8504647,-1.85232,-1.8544655,-1.8562345,-1.8583913,-1.8608136,-1.8623078,-1.8637316,-1.8652529,-1.8665835,-1.8681628,-1.8698537:0
-0.61427703,-0.59355475,-0.59201629,-0.65801173,-0.75773855,-0.83896355,-0.90983817,-0.96518466,-0.97911588,-0.98882543,-0.99106979,-0.96586834,-0.96893202,-0.97856629,-0.97717235,-0.98415136,-0.99829061,-1.0057719,-0.99197496,-0.97875839,-0.97956167,-0.98906331,-1.006294,-1.0291997,-1.0431756,-1.0376779,-1.0265168,-1.0301903,-1.0451982,-1.0585046,-1.0650583,-1.0674404,-1.0650936,-1.0523615,-1.0324319,-1.0089176,-0.99135154,-0.95814326,-0.91207209,-0.87425639,-0.83015736,-0.78734433,-0.73938562,-0.67255637,-0.60106203,-0.5661646,-0.56142904,-0.5549296,-0.53831216,-0.4868608,-0.45134826,-0.39874308,-0.28628846,-0.18839183,-0.093321914,0.026097585,0.19723673,0.41127811,0.50579272,0.57349145,0.64216044,0.66971418,0.66895533,0.66059898,0.72629012,0.81343961,0.93100557,1.0094449,0.99333153,1.0202285,1.1479875,1.1717974,1.1056165,1.0573937,1.0429054,0.97197214,0.89617793,0.84470862,0.77789744,0.79927355,0.94010148,0.94882597,0.83202952,0.7643612,0.67568502,0.61186437,0.56960518,0.59388003,0.65549258,0.67793207,0.71801175,0.78126016,0.69562691,0.57184583,0.50499078,0.4799049,0.46625263,0.40864047,0.38374445,0.30425125,0.23944429,0.24113525,0.22356877,0.202216,0.22417031,0.22330464,0.20585631,0.19547273,0.22068316,0.28514328,0.31677954,0.41537072,0.46747254,0.49502247,0.52788448,0.54185889,0.63274239,0.66654177,0.73228699,0.76918203,0.72332001,0.72516783,0.75743312,0.77487449,0.75528852,0.67781627,0.58113843,0.52029585,0.45739091,0.41741501,0.4111227,0.38499364,0.30310416,0.23974905,0.20124923,0.19666245,0.22123678,0.20246229,0.19339399,0.21082515,0.23303405,0.31519878,0.45165727,0.59358852,0.69430983,0.79531592,0.88758831,0.93139325,0.93754553,0.92506144,0.9892765,1.0713846,1.1430289,1.0723125,1.0143347,1.0237046,1.0374653,1.0123654,0.95379167,0.89481665,0.74679113,0.64918983,0.62340334,0.55460363,0.5442885,0.53478248,0.4459472,0.37415102,0.26993067,0.18191415,0.033864401,-0.089438899,-0.21751849,-0.32699998,-0.3867554,-0.44047332,-0.47471906,-0.48514696,-0.48303928,-0.47621219,-0.4671357,-0.39695496,-0.30139447,-0.25602661,-0.23755912,-0.19887191,-0.22132206,-0.26308922,-0.29552956,-0.30085824,-0.21419247,-0.11905612,-0.0098487519,0.098337202,0.19438264,0.32485807,0.4455446,0.59675229,0.72029616,0.90808629,1.0857253,1.2115634,1.2962558,1.4076332,1.5867637,1.7423674,1.7918691,1.9587413,1.9557708,1.8574587,1.8647199,1.6629089,1.5192021,1.5175177,1.5392089,1.5446791,1.5261914,1.6711148,1.7261321,1.7282087,1.7268454,1.5081253,1.2317211,1.0279673,0.83788412,0.68332415,0.65401336,0.74938523,0.90400074,1.036868,1.1382698,1.351924,1.399372,1.1914527,0.90754198,0.53584833,0.26417358,0.060131925,-0.17265084,-0.38907762,-0.59970411,-0.74217698,-0.89122919,-0.99996933,-1.0868652,-1.145203,-1.1769083,-1.1942484,-1.2066427,-1.2103813,-1.2087516,-1.2211572,-1.2633435,-1.3309273,-1.4021648,-1.4874757,-1.5573888,-1.6160546,-1.6592836,-1.6890177,-1.7102435,-1.7242412,-1.7351433,-1.7416293,-1.7467817,-1.751761,-1.7563144,-1.7607493,-1.7642376,-1.7658462,-1.7682133,-1.7702954,-1.7721002,-1.7748764,-1.7775568,-1.7789038,-1.7804295,-1.7824147,-1.7840349,-1.7853651,-1.7865642,-1.7892147,-1.791107,-1.7918251,-1.7933111,-1.7945472:0
-0.58432694,-0.56087781,-0.58063746,-0.65223592,-0.74986651,-0.83602688,-0.88269054,-0.91703879,-0.93241402,-0.93592519,-0.94930786,-0.95465127,-0.96022209,-0.97704852,-0.98262942,-0.97528157,-0.97096838,-0.96639116,-0.94998908,-0.94051141,-0.94617422,-0.95796216,-0.97125057,-0.98649126,-0.99948055,-0.99730848,-0.98511602,-0.98691164,-1.0071916,-1.0327075,-1.0434168,-1.0243197,-1.0085833,-1.0149424,-1.0050994,-0.98248512,-0.95951769,-0.9339424,-0.89041163,-0.83217297,-0.79630518,-0.77479536,-0.73773384,-0.6877027,-0.64264766,-0.62557367,-0.63250602,-0.62030227,-0.58314297,-0.52127341,-0.44907,-0.38630079,-0.31627495,-0.20835994,-0.04464269,0.11118171,0.26496141,0.4275252,0.51103851,0.61583848,0.71215789,0.73084797,0.73922755,0.76483121,0.88159987,0.97518298,0.98404808,1.0080819,1.1387871,1.2371849,1.2327625,1.2335305,1.2387584,1.2441375,1.1983139,1.1434738,1.0013281,0.86624265,0.86060898,0.86535689,0.91098362,0.92919383,0.81168996,0.75482684,0.67327359,0.54125478,0.55566844,0.60576501,0.56739277,0.58115495,0.5854114,0.54429432,0.49347168,0.41745372,0.37469965,0.37946159,0.31385205,0.2514625,0.22407663,0.16955598,0.13084069,0.10862113,0.10592129,0.13409286,0.17054028,0.14985658,0.14946594,0.17511964,0.15717468,0.17742091,0.2541631,0.30921885,0.34785009,0.3907117,0.4431701,0.4804923,0.49419103,0.53780585,0.58928194,0.59546198,0.58880481,0.61131906,0.61614095,0.59905705,0.58504623,0.55510635,0.47600995,0.41105067,0.39027164,0.3505928,0.29714536,0.2517996,0.24011202,0.22545294,0.20735805,0.19407818,0.17588383,0.2013162,0.22009505,0.25627463,0.31138498,0.34571752,0.42664417,0.59373058,0.76775421,0.84199775,0.95911236,1.0598112,1.0115944,0.95266904,1.039913,1.1633556,1.1840152,1.1302578,1.0887263,1.073948,1.0878262,1.0850065,1.0084135,0.90570581,0.81373757,0.73924234,0.68191431,0.60854432,0.56384896,0.54673714,0.4969708,0.45667023,0.33679782,0.20385939,0.080655796,-0.03915484,-0.17684805,-0.27785939,-0.36523378,-0.43584229,-0.45366095,-0.44806099,-0.43728358,-0.44157542,-0.45063514,-0.39266799,-0.34068793,-0.3126956,-0.29120546,-0.27394462,-0.27855875,-0.29070378,-0.28285593,-0.26984909,-0.18813385,-0.095580336,0.024142594,0.12286547,0.23162994,0.37374708,0.46112833,0.63245975,0.76679477,0.98045454,1.1400243,1.2914282,1.4440639,1.6044669,1.7989047,1.9239187,2.0212058,2.1171407,2.1771109,2.1602473,2.043563,1.8917938,1.7998625,1.6395228,1.547064,1.643501,1.6573366,1.5664007,1.5283266,1.54522,1.5469653,1.4161947,1.1306523,0.87804843,0.74718232,0.63523128,0.55595794,0.632788,0.71704125,0.80717558,0.9306249,1.0899525,1.1438971,0.96168392,0.6850928,0.37158796,0.11156168,-0.086287538,-0.26510865,-0.42072287,-0.61055523,-0.75940809,-0.89967865,-1.0133741,-1.1120411,-1.1736058,-1.2147259,-1.2374824,-1.2455389,-1.2506003,-1.256445,-1.2729734,-1.3081615,-1.3620623,-1.4249703,-1.4969208,-1.5541363,-1.6014162,-1.6354394,-1.6583472,-1.6741769,-1.6846503,-1.6930115,-1.6997031,-1.7048615,-1.7085226,-1.712672,-1.7164736,-1.7195552,-1.721877,-1.7239988,-1.7256883,-1.7274242,-1.7300132,-1.7324891,-1.7337905,-1.7352576,-1.7369318,-1.7390034,-1.7411594,-1.7427409,-1.7439239,-1.7449517,-1.7461427,-1.7473527,-1.7482243:0
-0.51973881,-0.47788275,-0.49268718,-0.54664986,-0.61995953,-0.73531553,-0.81836559,-0.85881368,-0.88165407,-0.89001838,-0.89391573,-0.89494972,-0.89164349,-0.90922861,-0.94661508,-0.98214795,-0.9938689,-0.99364411,-1.0050187,-1.003651,-0.99423152,-1.0042822,-1.0415388,-1.0812552,-1.115982,-1.1274382,-1.102813,-1.0907762,-1.1069408,-1.1222267,-1.1243753,-1.1084805,-1.0907268,-1.0942234,-1.0873448,-1.0584987,-1.0363628,-1.0007961,-0.94565155,-0.87037529,-0.79564702,-0.75156268,-0.67700044,-0.57082656,-0.50742604,-0.49965177,-0.50553744,-0.52093095,-0.51330287,-0.48280419,-0.46599017,-0.40878265,-0.35982262,-0.25926854,-0.092216728,0.021707894,0.13926518,0.27099625,0.37103793,0.43932345,0.51143573,0.4973077,0.53717794,0.67942635,0.69553746,0.70636176,0.75304967,0.76900754,0.77902275,0.74233692,0.77425421,0.87155126,0.90794159,0.86691816,0.84939849,0.78284187,0.68590194,0.64188843,0.5908413,0.67153742,0.71613714,0.73096295,0.77857031,0.68948014,0.60276458,0.58113507,0.5486901,0.55434323,0.61519321,0.65226734,0.71429119,0.74779894,0.73509846,0.69131559,0.65119954,0.6199178,0.58159361,0.53135974,0.51281264,0.45829289,0.33909795,0.25811876,0.23904469,0.23289612,0.2114072,0.21093207,0.23968991,0.22952444,0.19716928,0.25186127,0.3595444,0.45416419,0.51323057,0.53187728,0.57084777,0.67457849,0.71890279,0.74771271,0.81630197,0.85398357,0.8747758,0.90391477,0.93897406,0.93787437,0.92325209,0.83632296,0.71961812,0.63804793,0.54067814,0.48009188,0.44339196,0.38483918,0.38658982,0.36982752,0.32880265,0.26634189,0.24378493,0.25316699,0.20048842,0.22229971,0.27137858,0.30116731,0.38090886,0.50004408,0.64967775,0.77935038,0.84620166,0.89628992,0.86333792,0.84499208,0.9362286,1.0026449,1.0132887,0.99487837,1.0135897,1.0713794,1.0115746,0.91933826,0.85909002,0.78314704,0.72743814,0.66075694,0.57668436,0.59559838,0.6127571,0.5811334,0.5745189,0.53587603,0.43792863,0.31499077,0.1848528,0.06060469,-0.078674311,-0.19493662,-0.27315041,-0.333708,-0.3563168,-0.35878862,-0.33733159,-0.32537857,-0.34080731,-0.25005859,-0.12421535,-0.074725245,-0.066004646,-0.032841119,-0.066248185,-0.096981692,-0.11230103,-0.12321133,-0.054362051,0.031796685,0.17114042,0.32918104,0.32767609,0.32490196,0.43297602,0.57440352,0.66455551,0.83296405,0.97571364,1.0929554,1.167281,1.238797,1.3994329,1.5113232,1.5244182,1.4795706,1.4394364,1.3959607,1.4187667,1.4448561,1.3509802,1.2828178,1.3768843,1.3896981,1.4144624,1.6770375,1.6201117,1.6659887,1.8320826,1.8242258,1.6815023,1.3661187,1.1070131,0.96164473,0.95672927,1.0007815,1.1559375,1.2854116,1.3380279,1.5427143,1.6258492,1.5911673,1.3142132,0.737238,0.3143286,0.081547888,-0.1739613,-0.40910478,-0.62814181,-0.79167586,-0.95590207,-1.0842884,-1.1846736,-1.2368222,-1.2646269,-1.2763662,-1.2767657,-1.2680517,-1.260516,-1.2717905,-1.3066718,-1.3692746,-1.4441218,-1.5372359,-1.6144373,-1.6794039,-1.7252304,-1.7553457,-1.7767254,-1.7903401,-1.8005396,-1.8080297,-1.8146375,-1.8206318,-1.8255808,-1.8285963,-1.8320983,-1.8357082,-1.8373825,-1.8388871,-1.8415657,-1.8444545,-1.847031,-1.8487664,-1.850951,-1.85381,-1.8565163,-1.858637,-1.8608196,-1.8630136,-1.8646391,-1.8663786,-1.8678753,-1.8686068:1
-0.40727383,-0.38262992,-0.44092884,-0.52708256,-0.59484591,-0.69076724,-0.77191679,-0.79735013,-0.82758478,-0.84397153,-0.85457335,-0.85666829,-0.85052255,-0.86269171,-0.87542081,-0.89727555,-0.90475778,-0.89757468,-0.89358691,-0.89440764,-0.90743107,-0.93228936,-0.96256848,-0.98720834,-1.0069849,-1.0218726,-1.0132979,-0.9913819,-1.0049536,-1.030145,-1.0222198,-0.99766014,-0.989191,-0.98768682,-0.98473013,-0.97138077,-0.94951495,-0.92007603,-0.86499566,-0.81567941,-0.76115912,-0.68959274,-0.62700903,-0.54791999,-0.49227685,-0.48455133,-0.49225768,-0.51374652,-0.51308868,-0.48036249,-0.43872969,-0.39048135,-0.32013379,-0.23236616,-0.09180219,0.065427596,0.17134396,0.34029616,0.51025026,0.55488601,0.59263434,0.60423938,0.64558129,0.69009113,0.66012746,0.71261748,0.76356456,0.88354846,1.016597,1.0248195,1.111327,1.1350141,1.1600372,1.183902,1.106039,0.94866577,0.84685426,0.83982356,0.8368769,0.84206477,0.83314289,0.89719635,0.89317714,0.82275487,0.73317166,0.68631835,0.65742737,0.60431813,0.6574943,0.74143315,0.80413903,0.77404002,0.70528242,0.64123615,0.57923752,0.55701928,0.52286871,0.49585245,0.46987385,0.42145664,0.33550952,0.25222656,0.24188869,0.25266238,0.2471875,0.22333274,0.19293475,0.19468924,0.21162364,0.27831639,0.40501749,0.52933394,0.59028533,0.59739253,0.60573922,0.61693659,0.66150722,0.71965627,0.77066353,0.81627197,0.81510091,0.8175893,0.852766,0.86454906,0.86207055,0.86113918,0.76264517,0.58664939,0.49141165,0.46042244,0.39399423,0.3294831,0.27141894,0.23496459,0.25994714,0.26327243,0.20328549,0.17047202,0.16443198,0.14408246,0.19436855,0.27489798,0.36308541,0.49821164,0.61441901,0.70639314,0.77575993,0.8303181,0.83095363,0.84104597,0.89381806,0.92999245,0.9783167,0.92027424,0.87864175,0.92961742,0.94916178,0.90427376,0.80938185,0.67329971,0.56969837,0.54943883,0.56444776,0.56137744,0.5010297,0.42066884,0.39389976,0.41577471,0.31829965,0.23452338,0.11072089,-0.036221777,-0.1393885,-0.24932766,-0.34327936,-0.40379942,-0.39530947,-0.39578361,-0.40255441,-0.38388961,-0.40565422,-0.35298409,-0.25169912,-0.19256586,-0.14902691,-0.11668997,-0.17203414,-0.23595734,-0.29843102,-0.32731885,-0.20901968,-0.093082241,0.032817137,0.10544558,0.1768335,0.26757115,0.30810595,0.39258303,0.47703301,0.6660371,0.85071492,0.97123584,1.118299,1.2847239,1.4004946,1.553084,1.6314851,1.5967152,1.5956061,1.5456086,1.4093129,1.313823,1.1876143,1.1375414,1.2340757,1.390712,1.4032779,1.4714115,1.5208578,1.8262565,1.9937268,1.7929727,1.5527447,1.2861609,1.1067361,0.93043321,0.80236343,0.93286845,1.0979742,1.147445,1.2589919,1.695094,1.9097135,1.5998169,1.1715978,0.74315306,0.37700413,0.086087769,-0.16359254,-0.37168317,-0.58431536,-0.74573203,-0.91374015,-1.0331069,-1.1294763,-1.1908127,-1.2333586,-1.236153,-1.2215701,-1.2113039,-1.1986136,-1.2099549,-1.2429989,-1.3073518,-1.3981116,-1.5153536,-1.6096477,-1.6898235,-1.7481867,-1.7865674,-1.8152549,-1.8346865,-1.8466612,-1.8553897,-1.8648135,-1.8716397,-1.877582,-1.8830678,-1.8876112,-1.8907737,-1.8939634,-1.897052,-1.8998215,-1.9035037,-1.9072286,-1.9095264,-1.9122849,-1.9152754,-1.9178391,-1.9209708,-1.9240658,-1.9268692,-1.9293375,-1.9309771,-1.9328453,-1.9341239:1
-0.54327633,-0.50546034,-0.50130697,-0.54671129,-0.63468499,-0.71180884,-0.78801404,-0.85518225,-0.89254199,-0.9071128,-0.88818139,-0.86759001,-0.86377982,-0.86816373,-0.91614505,-0.97108193,-0.98124428,-0.98951457,-1.0078745,-1.0063362,-1.0047009,-1.0259927,-1.0548509,-1.0813099,-1.1007868,-1.098959,-1.0879175,-1.0758465,-1.0721559,-1.089215,-1.096547,-1.0906176,-1.0877201,-1.0779942,-1.0584602,-1.0474026,-1.0437387,-1.0071276,-0.94718087,-0.89963249,-0.85593733,-0.78937826,-0.66838468,-0.55578729,-0.49717012,-0.47026724,-0.47460002,-0.45520558,-0.4555688,-0.47461614,-0.45485305,-0.40923298,-0.36060492,-0.27111337,-0.17186632,-0.059013947,0.078722632,0.2368026,0.41707241,0.45577851,0.44960256,0.46165676,0.48582984,0.56926642,0.65199465,0.6977932,0.71656606,0.78330133,0.75936597,0.80154236,0.92704842,0.90454887,0.89023622,0.82990969,0.75129756,0.61604494,0.5570203,0.56358185,0.56153638,0.65351281,0.74414638,0.7064568,0.65359876,0.68396042,0.64635197,0.55875678,0.54302938,0.55846853,0.614203,0.72355674,0.75000902,0.77993384,0.74368807,0.68210585,0.72909765,0.707713,0.63863558,0.55166248,0.49989798,0.45453515,0.34855886,0.24731173,0.21987959,0.20349118,0.16763327,0.1693905,0.13589814,0.12991905,0.16696744,0.22252117,0.32958288,0.42699446,0.48857648,0.57283776,0.66494707,0.71643174,0.74991197,0.83461564,0.88435777,0.88051924,0.94633966,1.0197544,1.0151152,0.97499904,1.0054596,0.93311295,0.77075453,0.66161079,0.57616725,0.46712836,0.39206466,0.38774031,0.36629815,0.30064624,0.25456889,0.21280367,0.17156484,0.17117657,0.16538766,0.19235133,0.26278856,0.31418461,0.41206712,0.54444947,0.65624897,0.73113316,0.84529369,0.97726221,0.90424521,0.83218785,0.87337503,0.93360247,1.0394174,1.075535,1.0282863,0.95387737,0.94019102,0.92154858,0.83010542,0.76635624,0.69968679,0.66814102,0.64338199,0.60714598,0.56747963,0.57872473,0.53143257,0.43472759,0.32769761,0.24971846,0.15974457,0.03743954,-0.088849532,-0.24425238,-0.35100264,-0.39423755,-0.40482247,-0.38379835,-0.39557796,-0.40847749,-0.37375769,-0.24907848,-0.14688825,-0.064440363,-0.016627561,-0.010105757,-0.046162573,-0.13696352,-0.1979598,-0.22773633,-0.1534959,-0.020018159,0.13249091,0.24010406,0.25440952,0.34178855,0.43559973,0.54429636,0.65660304,0.86732057,1.0592223,1.1936686,1.305299,1.4141138,1.4526048,1.527168,1.7066685,1.7875457,1.779183,1.6590941,1.5167571,1.4539613,1.4533121,1.3338973,1.3138113,1.5183793,1.5135418,1.5870895,1.6326932,1.7295907,1.9077721,1.763845,1.4588408,1.2175272,1.0367111,0.93689654,0.90610256,0.99085911,1.1428086,1.2763163,1.4138636,1.6407842,1.6979027,1.4463022,1.0822626,0.61025254,0.21202416,-0.063913258,-0.33266622,-0.55388599,-0.76596056,-0.91786232,-1.053579,-1.1493712,-1.2296629,-1.2804556,-1.3040734,-1.307454,-1.3098826,-1.3047109,-1.2936223,-1.304667,-1.3313936,-1.3806267,-1.4473557,-1.5259275,-1.5914489,-1.6443294,-1.6822968,-1.7088459,-1.7269218,-1.7383745,-1.7480336,-1.755076,-1.7596992,-1.7636854,-1.7682782,-1.7729197,-1.7756639,-1.7775705,-1.7794356,-1.7813984,-1.7838403,-1.7861679,-1.788481,-1.7902534,-1.7927812,-1.7953103,-1.7972741,-1.7993412,-1.801837,-1.8040305,-1.8058287,-1.8073076,-1.8088298,-1.8096394:1
-0.55977161,-0.51515581,-0.50487576,-0.56351049,-0.65886079,-0.74356717,-0.82699006,-0.88457833,-0.90271497,-0.90874414,-0.90482096,-0.89437569,-0.89180433,-0.90589945,-0.93950112,-0.97512148,-0.99255645,-0.99337221,-1.0009119,-1.0068533,-1.0121176,-1.0286659,-1.0558988,-1.087398,-1.104545,-1.1032026,-1.0850365,-1.0746337,-1.0874439,-1.1052314,-1.1019224,-1.0907826,-1.0836016,-1.086405,-1.0831995,-1.0629271,-1.0399644,-1.0024593,-0.95452958,-0.89565145,-0.8216734,-0.74400946,-0.66950532,-0.58560572,-0.50631026,-0.48358707,-0.48840369,-0.49217213,-0.49793108,-0.49189505,-0.48086895,-0.42296244,-0.3393777,-0.26385143,-0.1541737,-0.035785853,0.11345923,0.25792435,0.33241939,0.37839063,0.43119171,0.50775146,0.52903043,0.58558361,0.6195449,0.60827339,0.64985609,0.70616761,0.75370939,0.84132094,0.88294379,0.88863603,0.84892339,0.77780287,0.73679527,0.65484667,0.55761259,0.53427801,0.59775941,0.61206577,0.68588733,0.71662921,0.6925492,0.64425774,0.59393387,0.57461873,0.5413732,0.57966904,0.58452258,0.65002892,0.75453812,0.75214296,0.71400511,0.63740384,0.59331351,0.58239701,0.56934921,0.5493056,0.5267071,0.46301159,0.33708887,0.23520227,0.17496059,0.15060388,0.14227494,0.1772515,0.21905104,0.16638925,0.14112363,0.21210461,0.33553803,0.43677659,0.48087165,0.51437618,0.58292335,0.64372292,0.71933462,0.77769327,0.79999773,0.89749168,0.95174596,0.9307604,0.96953756,1.0393359,1.0207915,0.89648488,0.77240866,0.65625037,0.55100733,0.47487229,0.39627825,0.34322054,0.27783104,0.24007314,0.21599749,0.1699765,0.15541028,0.14019963,0.1231249,0.14538486,0.18835878,0.25445855,0.38929229,0.531155,0.64466014,0.76217125,0.82547272,0.89134592,0.83949601,0.76285084,0.92151283,0.95281623,0.90314339,0.96835707,0.97183446,0.92790474,0.89648488,0.88997913,0.8230722,0.71168665,0.64793315,0.60031406,0.60478528,0.57997592,0.54425056,0.57043656,0.51347351,0.45229062,0.37427492,0.29254989,0.16428264,0.015657665,-0.11309939,-0.24270787,-0.34284886,-0.3919759,-0.37807905,-0.359547,-0.37735207,-0.38382354,-0.38464977,-0.30540881,-0.17868192,-0.097434229,-0.058507804,-0.036890534,-0.061265328,-0.12344017,-0.16624788,-0.1771226,-0.10989334,0.029529952,0.18356635,0.28474555,0.36175009,0.43245251,0.45809035,0.53890846,0.66639412,0.86309969,1.0270771,1.1479852,1.3073945,1.4161749,1.5105739,1.6476006,1.7364301,1.6699042,1.5601289,1.5684751,1.4985087,1.3587342,1.2562828,1.2628167,1.3372323,1.5464505,1.691149,1.7702198,1.7652859,1.9460951,2.1201599,2.0042433,1.6499582,1.3101294,1.0666858,0.96737097,0.96090874,0.9978106,1.1332212,1.2967173,1.4929127,1.7040615,1.8343013,1.6217471,1.2314375,0.72873568,0.32522319,0.0081523467,-0.29106941,-0.50487651,-0.70535226,-0.85965089,-1.0043757,-1.1135264,-1.1965643,-1.2414744,-1.2664966,-1.2665181,-1.2544414,-1.2401152,-1.2317163,-1.2387676,-1.2674673,-1.3209271,-1.3895604,-1.4815074,-1.5583593,-1.6224322,-1.6683684,-1.6982471,-1.7187004,-1.7317524,-1.7422709,-1.7499186,-1.755348,-1.7602653,-1.7652346,-1.7690987,-1.7724186,-1.7743828,-1.7763235,-1.7787835,-1.7808211,-1.7836123,-1.7862239,-1.7883031,-1.790752,-1.7925978,-1.7951064,-1.7976803,-1.7999125,-1.8014852,-1.8031682,-1.8047526,-1.8057864,-1.8073048:1
-0.57643322,-0.53298774,-0.50687836,-0.56112421,-0.65208653,-0.76729111,-0.84949585,-0.88827835,-0.91485692,-0.92853993,-0.92320641,-0.90031318,-0.88434139,-0.91255943,-0.94883949,-0.97170323,-0.98879153,-0.97583454,-0.9773796,-0.98456857,-0.99444933,-1.0116326,-1.0313886,-1.0734394,-1.0896117,-1.0931967,-1.0881054,-1.081225,-1.0954903,-1.1078622,-1.1120739,-1.1084332,-1.0914475,-1.0787625,-1.0702468,-1.0505864,-1.0246021,-0.99771947,-0.94820768,-0.88248148,-0.83049047,-0.76586433,-0.6651793,-0.56415153,-0.49556625,-0.46357789,-0.48152968,-0.50846755,-0.50733376,-0.49310519,-0.47746192,-0.42829096,-0.35948769,-0.24633269,-0.15645143,-0.059151222,0.1445404,0.27737333,0.34455888,0.38121605,0.39327528,0.43725307,0.50914382,0.58269207,0.62293233,0.62866142,0.67846292,0.72752642,0.8210334,0.92691245,0.83175368,0.85971947,0.98295721,0.90684997,0.82451316,0.73834228,0.59686793,0.61085793,0.6613637,0.66692592,0.69678228,0.68913494,0.69053615,0.68926807,0.60278372,0.53227361,0.57554151,0.57992539,0.61412924,0.69282558,0.67521102,0.71054293,0.73811262,0.66308931,0.61805284,0.63728279,0.64905433,0.57294826,0.49549009,0.41810353,0.31718682,0.2959372,0.29182595,0.25724731,0.25825593,0.27682075,0.2544959,0.21747466,0.2362787,0.26800515,0.30484605,0.40182813,0.49521937,0.54649656,0.57719032,0.61206916,0.6788621,0.68304846,0.71702,0.83629244,0.89925111,0.89045099,0.85435233,0.85311554,0.82007963,0.77729928,0.77872076,0.66907925,0.5806444,0.52826896,0.44776628,0.41149577,0.37549831,0.36289436,0.33280442,0.28647609,0.26268362,0.23237356,0.22293621,0.24517885,0.29528841,0.3530799,0.40861049,0.50503352,0.61959345,0.75326823,0.86750143,0.87422237,0.80255503,0.77162122,0.8508993,0.89284024,0.91184053,0.97986104,0.97561665,0.92626132,0.87342146,0.8659814,0.84094641,0.7566279,0.75823174,0.69290037,0.62318522,0.63179005,0.6316217,0.6209813,0.61310928,0.55698124,0.43059938,0.37687693,0.2382902,0.11159116,0.0065798564,-0.12908733,-0.2382624,-0.29939807,-0.2855743,-0.26238256,-0.27641393,-0.2962826,-0.29838585,-0.18003662,-0.087490201,-0.016196898,0.026859264,0.0310295,0.017162234,-0.061868686,-0.11885056,-0.11071408,-0.029579588,0.056012941,0.20272237,0.29509598,0.38433482,0.4452561,0.47049244,0.56263544,0.67709989,0.8472286,0.95621718,1.0722651,1.1437996,1.2722302,1.3825455,1.4044028,1.4293204,1.4988517,1.5944635,1.5052716,1.3697642,1.3444496,1.3343552,1.3137121,1.2727263,1.4460642,1.5600929,1.4451236,1.4823467,1.804247,1.8582149,1.7616395,1.5401203,1.2684979,1.0869822,0.96193312,0.97428693,1.1222984,1.1705784,1.2745837,1.4317198,1.5839328,1.7248396,1.6528573,1.3514524,0.91499324,0.46698754,0.14174603,-0.1318624,-0.36538979,-0.60224419,-0.76494472,-0.92711845,-1.0557331,-1.1504088,-1.1990849,-1.2191039,-1.2134086,-1.1999425,-1.1884337,-1.1752972,-1.183302,-1.2210732,-1.2950986,-1.3888392,-1.5033345,-1.6032767,-1.6883166,-1.7461393,-1.7826627,-1.8078919,-1.825466,-1.8399487,-1.8488712,-1.8549885,-1.8617288,-1.8680035,-1.8724202,-1.8760465,-1.8790368,-1.882021,-1.8841979,-1.8856971,-1.8885837,-1.8922699,-1.8943861,-1.896649,-1.8994357,-1.901701,-1.9041204,-1.9068349,-1.9091876,-1.9111639,-1.9127787,-1.9146137,-1.9157485:1
-0.41806821,-0.35371261,-0.36231337,-0.46021944,-0.5520882,-0.64319714,-0.74832691,-0.8130048,-0.83607823,-0.83024067,-0.81869116,-0.79386383,-0.79168235,-0.82971438,-0.87310463,-0.89958174,-0.91588172,-0.92426342,-0.9156264,-0.90070947,-0.9148271,-0.93977068,-0.95871585,-1.0045234,-1.0261267,-1.0170879,-1.0115636,-1.0023342,-1.0058897,-1.0313242,-1.0405132,-1.0312515,-1.0178443,-1.0110345,-1.0123682,-0.99193189,-0.94498281,-0.90975652,-0.86589293,-0.80989563,-0.75248705,-0.685419,-0.6048589,-0.50640154,-0.44439441,-0.43542443,-0.42989966,-0.44158853,-0.42379318,-0.39887241,-0.4183481,-0.37852356,-0.30396598,-0.2348757,-0.11934025,0.027494005,0.15378887,0.25545792,0.3468643,0.43764598,0.52427424,0.5295181,0.52889779,0.58052657,0.61503237,0.68215935,0.74309767,0.82036872,0.95991699,1.0195989,0.99173726,1.0215489,1.0128645,0.89056715,0.80987779,0.82701758,0.77023107,0.68270699,0.66671818,0.7330811,0.8294867,0.83792747,0.80260628,0.77767776,0.76039013,0.7347518,0.68291201,0.64512169,0.66519752,0.74681736,0.77211497,0.76062746,0.77231706,0.70111154,0.63008705,0.6038461,0.56860241,0.54530262,0.52583204,0.43089096,0.34305365,0.31013183,0.25823003,0.22572102,0.24237313,0.25553484,0.26355988,0.24863944,0.26635743,0.3401046,0.42043453,0.48760977,0.54866244,0.62492844,0.64581907,0.65560503,0.6913848,0.77569091,0.82195914,0.82899507,0.86934691,0.89055794,0.90936155,0.94978447,0.95139331,0.90666417,0.82174213,0.66548165,0.5577301,0.50290061,0.42002406,0.36408569,0.34373977,0.32259251,0.30801118,0.27319434,0.2446112,0.23297015,0.22161411,0.24595083,0.28291493,0.33093998,0.43512816,0.54764993,0.67575573,0.78669746,0.88039251,0.92304034,0.79893996,0.75933463,0.92441915,1.0248315,0.99210357,0.90767097,0.88028883,0.91422638,0.89448381,0.85096269,0.81712473,0.69481349,0.58278497,0.55769545,0.58128302,0.61524573,0.56846291,0.52159133,0.51252747,0.4635715,0.36768766,0.33275472,0.22775612,0.072772098,-0.090733128,-0.2077537,-0.28411973,-0.32887505,-0.35102166,-0.35957036,-0.32201197,-0.29912089,-0.30325778,-0.21588988,-0.14532339,-0.11101046,-0.074016091,-0.037452516,-0.063166592,-0.14628135,-0.22328203,-0.23166036,-0.10199719,-0.012427483,0.065794224,0.12961389,0.16993839,0.25654194,0.31518924,0.39541973,0.48049092,0.69193683,0.88726934,1.0359669,1.1776503,1.2733909,1.430679,1.4856635,1.476462,1.536969,1.5265299,1.5137456,1.4724924,1.3253014,1.2054584,1.177738,1.1913548,1.2678907,1.3115403,1.4540807,1.575397,1.7756546,1.9798073,1.8058068,1.4157629,1.1563838,1.0156736,0.92867376,0.82522434,0.82416095,1.0123837,1.2120269,1.3629778,1.4669345,1.5930059,1.5049185,1.145717,0.71802072,0.39731621,0.11938675,-0.16710501,-0.3943075,-0.60650006,-0.76873775,-0.92414146,-1.0479548,-1.1455039,-1.2040252,-1.2382911,-1.2378769,-1.2248319,-1.2086632,-1.190774,-1.1911391,-1.2327806,-1.3115527,-1.4056117,-1.5281505,-1.6318366,-1.7210659,-1.7861214,-1.8312765,-1.8631143,-1.8827656,-1.8987562,-1.9106351,-1.919344,-1.9258442,-1.9330077,-1.9393049,-1.9437506,-1.9479391,-1.9517898,-1.9546693,-1.958082,-1.9618492,-1.9655101,-1.9686912,-1.9717816,-1.9750805,-1.9784839,-1.9818859,-1.9854779,-1.9889955,-1.991261,-1.9930087,-1.9953928,-1.9975214:1
-0.51462958,-0.48927034,-0.43838821,-0.45496406,-0.60239219,-0.71440149,-0.78294266,-0.8360633,-0.8541366,-0.86456684,-0.87161075,-0.86796966,-0.88538036,-0.91420619,-0.94152311,-0.9649207,-0.97356067,-0.95965815,-0.94835395,-0.96095763,-0.96558812,-0.9857533,-1.0143134,-1.031493,-1.0496212,-1.0444563,-1.0186017,-1.0305017,-1.0469865,-1.060494,-1.0817389,-1.0430274,-1.01768,-1.0377787,-1.0279978,-1.0054459,-0.98601204,-0.95461372,-0.89384241,-0.83487529,-0.78520518,-0.71661727,-0.62876087,-0.54825396,-0.51568993,-0.49854655,-0.49644224,-0.50145119,-0.50941248,-0.51729188,-0.49794054,-0.46683354,-0.39781851,-0.29376536,-0.17347527,-0.08773347,0.066312203,0.19420421,0.23114546,0.2700938,0.30264883,0.33711889,0.34443965,0.40674807,0.44173817,0.46622741,0.54000809,0.62775795,0.65218962,0.69248236,0.71167914,0.70783516,0.72747257,0.7686337,0.8662946,0.77311167,0.63496724,0.65864918,0.63725762,0.58311371,0.64114609,0.73064613,0.71582046,0.62830372,0.54273813,0.55052321,0.54141603,0.54954796,0.53821771,0.52916713,0.59560164,0.65510048,0.65815507,0.60700026,0.58315359,0.59036514,0.54305142,0.53073714,0.4935529,0.39573809,0.41674561,0.32470824,0.22094138,0.26837878,0.28877568,0.2926499,0.2737961,0.20231609,0.19361031,0.23900814,0.3135108,0.47211461,0.56430986,0.531738,0.57137521,0.60440602,0.6154383,0.73592829,0.80209495,0.80051605,0.76483365,0.72141569,0.81929718,0.87391033,0.85639438,0.84003771,0.72717031,0.59500227,0.49582324,0.46562933,0.4340219,0.38498984,0.34288937,0.27266168,0.25796323,0.28058063,0.27727255,0.23506415,0.23463403,0.24114793,0.21115038,0.31011397,0.41609951,0.48046165,0.63856535,0.70953078,0.72002908,0.75182461,0.73941558,0.70300241,0.77284821,0.87914319,0.90916646,0.90056733,0.93924997,0.95682809,0.95879231,0.95724299,0.86934919,0.78691311,0.696836,0.62776545,0.61144469,0.56040896,0.60770027,0.63194781,0.57910402,0.57151851,0.50879316,0.4131505,0.2615876,0.16913394,0.05128331,-0.083387976,-0.15038583,-0.21713267,-0.22227121,-0.18176379,-0.18167429,-0.20548752,-0.20342791,-0.12879042,-0.048128203,0.04297775,0.057498921,-0.0077535801,-0.019306014,-0.04933947,-0.092747674,-0.036980167,0.052241412,0.11002609,0.17612297,0.24932369,0.39163632,0.3754684,0.38264319,0.50775381,0.58448029,0.66037278,0.79969825,0.92630042,1.0191072,1.0356193,1.1475703,1.3710403,1.4683546,1.5153767,1.4052654,1.3313184,1.3476269,1.35275,1.3719692,1.2637534,1.1429816,1.3168007,1.6000338,1.751206,1.7289395,1.946376,2.0468287,2.0153209,1.6937705,1.4041343,1.3262449,1.1978834,1.0368027,1.0584402,1.2640792,1.2987791,1.3427968,1.6600525,1.8745067,1.9078045,1.6595891,1.1174915,0.71611531,0.43091008,0.12847496,-0.11549755,-0.39183892,-0.58940812,-0.78316099,-0.92292869,-1.0165222,-1.0831913,-1.1238415,-1.1274343,-1.1127042,-1.0847541,-1.054575,-1.0505534,-1.0864593,-1.1670911,-1.2825245,-1.4337053,-1.5642211,-1.6804867,-1.7630178,-1.8181786,-1.8549552,-1.8802171,-1.8989111,-1.9104735,-1.9215236,-1.9299915,-1.9364315,-1.9431416,-1.9489779,-1.9537288,-1.9586514,-1.9610933,-1.9636632,-1.9687294,-1.9733606,-1.9766374,-1.9809641,-1.9850788,-1.9888419,-1.9924407,-1.9952345,-1.99835,-2.0018958,-2.0045729,-2.0063342,-2.0080131:1
-0.62909419,-0.60395183,-0.6394648,-0.67217873,-0.72981696,-0.81130731,-0.86505099,-0.89712317,-0.9209693,-0.93593685,-0.93256674,-0.92058967,-0.91985788,-0.94675458,-0.9817074,-0.99948704,-1.0017932,-1.000494,-0.99485472,-1.0085826,-1.0307119,-1.0521258,-1.0646441,-1.0751883,-1.0941701,-1.0870324,-1.0634697,-1.0483512,-1.0440581,-1.0562291,-1.0582035,-1.0449673,-1.0451448,-1.044851,-1.0365389,-1.0220494,-0.9930177,-0.95051994,-0.91040555,-0.8572233,-0.80319141,-0.75399386,-0.63540482,-0.4988612,-0.46327337,-0.43493383,-0.42297675,-0.45276715,-0.44583241,-0.45015204,-0.44885689,-0.42898379,-0.38671734,-0.2858749,-0.15482875,-0.024444441,0.083502558,0.18044318,0.2638284,0.30653459,0.37543403,0.46652054,0.46059008,0.45800662,0.48586621,0.4889771,0.54194611,0.64068546,0.73745915,0.75955682,0.77146213,0.82745755,0.79338089,0.69665511,0.62737314,0.60070186,0.59429979,0.56334075,0.51635931,0.57175201,0.70873399,0.77785886,0.68273632,0.62933421,0.6036625,0.5648794,0.5366051,0.51768152,0.56806953,0.61125578,0.65937794,0.74213479,0.79554514,0.70322112,0.64689237,0.64200297,0.59892548,0.56062169,0.4935398,0.43082171,0.38251004,0.26099781,0.20935132,0.24433334,0.2447842,0.22959903,0.22340143,0.21417656,0.21131955,0.25286534,0.38248523,0.51268261,0.51850699,0.50272125,0.57618286,0.69922659,0.72652282,0.72705538,0.81651565,0.95110238,0.93648678,0.91169262,0.91123834,0.89498335,0.98481823,0.95734704,0.77726737,0.64179775,0.58531426,0.53922288,0.45857629,0.39747064,0.35788175,0.3048505,0.26826855,0.27310663,0.2620178,0.23385482,0.21325068,0.20870369,0.27242606,0.34113333,0.4310573,0.56302196,0.69799464,0.75849212,0.82917351,0.92604184,0.87186954,0.81250594,0.87520243,0.90048017,0.86745901,0.91833927,0.97856448,0.98869555,0.9441008,0.88680436,0.76187367,0.70053511,0.66745887,0.57023667,0.56511179,0.61428293,0.57035548,0.55327619,0.52502841,0.51166956,0.46412498,0.30428853,0.13416327,0.032867086,-0.047276142,-0.15884028,-0.2463998,-0.31023467,-0.32098033,-0.31242309,-0.31245186,-0.2769144,-0.2579382,-0.14052551,-0.028086498,0.037452675,0.03389649,-0.021801203,-0.077767103,-0.14620232,-0.18596905,-0.19283738,-0.082081492,0.035324568,0.11570606,0.230765,0.43825875,0.48070646,0.44604954,0.51582942,0.58037117,0.75259545,0.90844485,1.0145855,1.1816549,1.3125056,1.4202943,1.4639271,1.5674939,1.6855776,1.6631021,1.5813943,1.4475483,1.3369996,1.4221478,1.4075864,1.3145542,1.4620235,1.5219735,1.6104007,1.7682219,1.9981303,1.9648174,1.7789223,1.536286,1.3279046,1.1575912,0.92163783,0.88708058,1.039951,1.1754779,1.4015725,1.5667272,1.7676852,1.9508644,1.7804847,1.324128,0.7866181,0.44644832,0.15414149,-0.13145871,-0.37618888,-0.60670436,-0.77847169,-0.94907721,-1.0778181,-1.1859672,-1.2538912,-1.2929606,-1.3143222,-1.3314984,-1.3356646,-1.3353281,-1.3535649,-1.3860851,-1.4329355,-1.492473,-1.5610491,-1.6165511,-1.6653496,-1.7000932,-1.7228108,-1.7402818,-1.7521451,-1.761611,-1.7684379,-1.7738977,-1.7786486,-1.7835003,-1.7877971,-1.7898316,-1.7918451,-1.7952893,-1.7978162,-1.7999698,-1.8024652,-1.804893,-1.8076612,-1.8101641,-1.8123578,-1.8160353,-1.8193956,-1.8217602,-1.8235015,-1.8254132,-1.8277802,-1.8291416,-1.8308087:1
-0.62617203,-0.55686824,-0.54579751,-0.58558229,-0.67391162,-0.76622656,-0.82892123,-0.86945233,-0.88105878,-0.87628436,-0.85910846,-0.84050597,-0.85034776,-0.88228614,-0.92427149,-0.96566314,-1.0024536,-1.0226676,-1.0188168,-1.0294724,-1.0468866,-1.0552218,-1.0793825,-1.0995863,-1.0999804,-1.0931707,-1.0672325,-1.0286298,-1.026772,-1.0413859,-1.0380548,-1.0320579,-1.0253459,-1.0293469,-1.0265317,-1.0072221,-0.99221554,-0.96465459,-0.91062848,-0.8537054,-0.79207248,-0.69612947,-0.58795997,-0.48583699,-0.391176,-0.35482246,-0.35984217,-0.37330965,-0.36459025,-0.37319925,-0.39446017,-0.37417841,-0.35821213,-0.31275504,-0.2141463,-0.089142687,0.082935611,0.20713307,0.27910086,0.35914723,0.37816907,0.39592728,0.41775185,0.4529196,0.51124981,0.55730972,0.5532202,0.57635777,0.69543055,0.73785551,0.72578801,0.74680471,0.66049777,0.60794881,0.57460608,0.5690128,0.52917229,0.42902048,0.47920566,0.58726357,0.66548081,0.7202854,0.67446879,0.60979302,0.54550643,0.49243195,0.51295027,0.54765087,0.5470041,0.58495141,0.69317757,0.74056955,0.73567996,0.6879368,0.61236821,0.59283448,0.61251527,0.60777487,0.57631978,0.50633308,0.40397541,0.30622259,0.2653182,0.23451055,0.2034363,0.21846339,0.24051313,0.23610167,0.26171661,0.32966397,0.3919324,0.46765018,0.5341413,0.58701894,0.68073969,0.75245014,0.8212795,0.93092271,0.94767462,0.99320213,1.0584407,1.0090641,1.0116991,1.0626968,1.0746043,1.0580025,0.9300186,0.78198993,0.70451715,0.62519566,0.49920878,0.40474265,0.36968371,0.33521753,0.29446882,0.27794432,0.25855594,0.25513821,0.24793779,0.23348347,0.28020498,0.3538915,0.43514683,0.53510762,0.66537332,0.75073949,0.79663182,0.90460898,0.92981422,0.85734368,0.86760694,0.94534777,0.97932906,0.94550781,0.95506102,1.0161666,0.98726044,0.93220606,0.81725709,0.74221336,0.68479334,0.61899677,0.64552005,0.6535609,0.58594898,0.55384129,0.55687329,0.51046338,0.44547018,0.37134353,0.21499615,0.076803308,-0.045528229,-0.18789717,-0.28509508,-0.32797752,-0.32173018,-0.29831582,-0.30077954,-0.31248474,-0.31090963,-0.18772429,-0.051834205,0.024310076,0.079307404,0.0129464,-0.088532449,-0.14005605,-0.20808336,-0.26178185,-0.20901421,-0.07979677,0.052474642,0.14934745,0.23158273,0.29685484,0.34580458,0.44826524,0.56386125,0.71213349,0.88132751,1.014539,1.1112559,1.252177,1.3205045,1.3694614,1.5118368,1.5948596,1.5905876,1.60812,1.4927252,1.3157137,1.3017143,1.3644077,1.4713106,1.5282749,1.4301133,1.530887,1.6879574,1.8059047,1.9291594,1.7826337,1.4377789,1.1304419,0.98406245,0.92790553,0.89418965,1.0269857,1.287059,1.4459285,1.5822192,1.8543951,1.9706292,1.794585,1.4431643,0.90936553,0.40511845,0.036424174,-0.29388543,-0.55064354,-0.75414158,-0.91100072,-1.0705556,-1.1823096,-1.2734467,-1.3346865,-1.3818489,-1.4131555,-1.4330288,-1.4489246,-1.4642588,-1.4810609,-1.504071,-1.5376328,-1.5759019,-1.6161673,-1.6485351,-1.6762756,-1.6974416,-1.7120623,-1.7235177,-1.7317397,-1.7383484,-1.7440329,-1.7484024,-1.7514038,-1.7550782,-1.7588715,-1.7613994,-1.7629818,-1.7651532,-1.7669433,-1.7688614,-1.7717742,-1.7752714,-1.7771924,-1.7792058,-1.7824388,-1.7853203,-1.7880102,-1.7906227,-1.7934769,-1.7960424,-1.7978357,-1.7990404,-1.8001914:1
-0.65403491,-0.6347155,-0.62591112,-0.65057748,-0.71011153,-0.79393303,-0.87650045,-0.91708541,-0.9272314,-0.91861619,-0.90504849,-0.88425405,-0.88279555,-0.91772946,-0.95532371,-0.9872264,-0.99940125,-1.0021007,-1.0005365,-0.99862548,-1.0106343,-1.0328134,-1.0550429,-1.0746259,-1.0784039,-1.0631444,-1.0457623,-1.0351334,-1.0342879,-1.0446116,-1.0536142,-1.0396135,-1.0293595,-1.0232959,-1.0187269,-1.0183166,-0.99805131,-0.95683332,-0.90511286,-0.85731276,-0.78979611,-0.70672638,-0.62614716,-0.52153264,-0.46236748,-0.45331308,-0.43913266,-0.44951767,-0.46206198,-0.44630659,-0.44647374,-0.42984517,-0.35773885,-0.2725012,-0.17890825,-0.045448664,0.10912894,0.23419102,0.32882797,0.37487112,0.42793883,0.47126785,0.5149748,0.62066664,0.72324778,0.70777771,0.68893604,0.7287585,0.77736981,0.85009872,0.91723277,0.85305525,0.76463716,0.74425356,0.70759489,0.68252546,0.62483772,0.57689263,0.61029476,0.68861938,0.75947897,0.74976328,0.69360238,0.60117683,0.56216247,0.56728029,0.52623566,0.55364101,0.62572206,0.72096029,0.80524894,0.77318983,0.74221411,0.72836292,0.64534302,0.59578159,0.56394724,0.54096357,0.5336606,0.43814143,0.33886088,0.25834646,0.20138635,0.19363712,0.19954412,0.2288963,0.20216296,0.1660402,0.18161531,0.23624952,0.36853565,0.51100192,0.57716087,0.58815689,0.63292704,0.72304209,0.8102829,0.8501439,0.87469802,0.90959946,0.95602421,0.9994032,1.0235599,1.0134695,1.0103223,0.91339374,0.72318453,0.62912401,0.56129282,0.50086229,0.45172947,0.38186293,0.29180139,0.25598456,0.25157051,0.24982118,0.22935767,0.18090222,0.16959519,0.17326876,0.24375098,0.36496315,0.44941162,0.54404815,0.71133369,0.8316539,0.86677134,0.87790204,0.82301992,0.8387938,0.95607645,0.99300957,0.97158929,0.95947473,0.99326947,0.9653429,0.90254116,0.8630163,0.78371671,0.67493761,0.61732384,0.58068098,0.54150512,0.53700524,0.53121541,0.49938656,0.46511576,0.43137353,0.33960968,0.25181432,0.12242177,-0.010700828,-0.14389105,-0.26308637,-0.34646287,-0.38763188,-0.38863155,-0.37747149,-0.3740797,-0.3681151,-0.37159823,-0.27596061,-0.13499561,-0.06575307,-0.069555399,-0.094008159,-0.13815671,-0.20019666,-0.2616681,-0.2725804,-0.17523157,-0.086103641,0.01856382,0.14347752,0.29908021,0.33278192,0.33704237,0.4528411,0.62151864,0.83111474,0.93358309,1.0595048,1.2575259,1.4188169,1.515156,1.5855866,1.7059404,1.7936032,1.7282511,1.6452605,1.5176216,1.4095407,1.432942,1.4083572,1.372523,1.5401396,1.5734257,1.6280646,1.8008017,1.9478043,1.9522107,1.7634121,1.5247557,1.2258347,1.0206425,0.91384805,0.84978742,0.94086134,1.1096458,1.2826158,1.4622851,1.6733313,1.794684,1.7274536,1.3167775,0.70110934,0.2841973,-0.03360078,-0.32555155,-0.53474684,-0.74666234,-0.9022471,-1.0477371,-1.1589915,-1.2401802,-1.2930269,-1.33318,-1.3555581,-1.3668452,-1.3714943,-1.3744032,-1.3877862,-1.4140081,-1.4528592,-1.4997144,-1.5537233,-1.5969593,-1.634117,-1.6623072,-1.6815093,-1.695676,-1.7055646,-1.7140604,-1.7202943,-1.7243843,-1.7280767,-1.7316326,-1.7354389,-1.7387968,-1.7407106,-1.742619,-1.7442696,-1.7460606,-1.7488564,-1.7523265,-1.7537679,-1.7556341,-1.7581491,-1.7602852,-1.7631667,-1.7662034,-1.7681609,-1.7698778,-1.7716513,-1.7728353,-1.7742307:1
-0.67546256,-0.61780148,-0.61906915,-0.664476,-0.75110223,-0.84118766,-0.90001286,-0.93792622,-0.95363517,-0.94810902,-0.92668439,-0.89887007,-0.89762203,-0.9427395,-0.97731298,-0.99955085,-1.0218811,-1.0343651,-1.0381353,-1.0470809,-1.0516123,-1.0620033,-1.0856481,-1.0993465,-1.11585,-1.1128403,-1.0843059,-1.0692675,-1.0704423,-1.0769304,-1.0789963,-1.0720945,-1.0663796,-1.0667552,-1.0609425,-1.0414195,-1.022539,-0.99609863,-0.94798244,-0.89308984,-0.82774046,-0.73810103,-0.64034955,-0.54355408,-0.48688117,-0.47517648,-0.48256684,-0.50585582,-0.51886058,-0.50048695,-0.49861509,-0.48659797,-0.42619701,-0.35137571,-0.21802807,-0.041780857,0.11209809,0.24781232,0.36916167,0.38747786,0.37769259,0.41234049,0.468383,0.50925543,0.51782099,0.53346039,0.56957644,0.61251645,0.62506098,0.6784267,0.74555613,0.76239338,0.72752945,0.6269011,0.55024442,0.54913956,0.54801376,0.51545742,0.50309005,0.56675067,0.64873985,0.6962143,0.66533988,0.56634524,0.48340688,0.47770041,0.50676225,0.54711992,0.63067761,0.67288646,0.74121059,0.77501707,0.70709719,0.66552521,0.63873237,0.60319009,0.56567834,0.56602476,0.51592884,0.41931765,0.30560037,0.23116211,0.17541729,0.14188991,0.16579758,0.17726649,0.1713369,0.16444193,0.19443199,0.28075131,0.3857559,0.49544376,0.58780451,0.60061313,0.68225524,0.74683723,0.78423319,0.88110953,0.9213858,0.95202339,1.002194,1.0063478,0.98557882,1.0158782,1.0129074,0.96538484,0.84171486,0.70610996,0.62871645,0.52473057,0.4195151,0.35041186,0.31754663,0.2935569,0.25436917,0.22943909,0.20343433,0.17753204,0.18219278,0.21153202,0.25323691,0.3457029,0.47119639,0.61867379,0.75933408,0.81363434,0.86106861,0.9300317,0.89145514,0.81318425,0.86923374,0.92094006,0.93031174,0.90647072,0.93603217,0.94119028,0.89300087,0.8590462,0.74240594,0.66560885,0.62432612,0.57467528,0.55067831,0.5698865,0.55098798,0.51540882,0.50537617,0.44875094,0.32745428,0.22543128,0.099005612,-0.004082467,-0.13104897,-0.25496421,-0.32566612,-0.36164993,-0.36031245,-0.34543373,-0.34761289,-0.35300705,-0.34449734,-0.20101669,-0.079691842,-0.021663405,-0.0019278066,-0.033861249,-0.090025598,-0.16448836,-0.22639711,-0.22665093,-0.12465006,-0.030349092,0.082344863,0.15297697,0.24297007,0.36901638,0.39196961,0.47928368,0.61262512,0.82676818,0.9911371,1.0711717,1.1694175,1.3437524,1.4975497,1.61816,1.7339011,1.7679576,1.716269,1.6846103,1.6155533,1.476839,1.3715846,1.2880724,1.3034354,1.5448523,1.648402,1.720958,1.8535869,2.112972,2.1056375,1.8466246,1.5900796,1.315935,1.0738816,0.96729766,0.95369108,1.082212,1.2449796,1.4021702,1.6102386,1.8225926,1.9233035,1.7297138,1.3454295,0.77738999,0.31944194,0.027191985,-0.28149493,-0.51932436,-0.71709553,-0.87619029,-1.0264696,-1.1310967,-1.2155108,-1.2665226,-1.2974488,-1.3103354,-1.311502,-1.3087653,-1.3063263,-1.3147951,-1.335745,-1.376767,-1.4322636,-1.4947684,-1.5467246,-1.5939837,-1.6284004,-1.6519423,-1.669002,-1.6801401,-1.6886537,-1.6949327,-1.700117,-1.7031769,-1.706951,-1.71132,-1.7140234,-1.7154762,-1.7180171,-1.7199531,-1.7217886,-1.7247828,-1.7276409,-1.7297982,-1.7315808,-1.7335374,-1.7360817,-1.7387771,-1.74156,-1.7436119,-1.7452583,-1.7470727,-1.7484888,-1.7494639:1
-0.53874235,-0.47511614,-0.48579124,-0.56873435,-0.65473954,-0.74705635,-0.83287956,-0.86936615,-0.88986142,-0.88882384,-0.86334809,-0.84220676,-0.84369961,-0.8804067,-0.91241556,-0.94213941,-0.95956281,-0.96435467,-0.96444682,-0.96641438,-0.97495356,-0.9812147,-1.0081687,-1.0402236,-1.0565109,-1.0575533,-1.038793,-1.0204496,-1.0320063,-1.052051,-1.0557722,-1.0428177,-1.0306685,-1.0375037,-1.0360841,-1.0122182,-0.98871332,-0.95671226,-0.9060983,-0.84546842,-0.785066,-0.72713723,-0.64651251,-0.54818445,-0.46211119,-0.44186481,-0.44281986,-0.44741099,-0.47186777,-0.46546765,-0.44328228,-0.41109343,-0.33266888,-0.23518729,-0.12171654,0.012687489,0.12959457,0.28328112,0.40916457,0.46688214,0.53984535,0.56864636,0.5718861,0.61303587,0.61060557,0.6611214,0.7479772,0.77558904,0.83847356,0.89559572,0.90226598,0.8809983,0.87664262,0.85006287,0.81613576,0.81287776,0.7181001,0.6562676,0.67449147,0.64868065,0.67194378,0.75978203,0.74786612,0.69301835,0.63252777,0.57790681,0.57500181,0.57273538,0.5995001,0.66531054,0.73384203,0.76321487,0.72914099,0.65328157,0.63749033,0.62231476,0.58396622,0.52424589,0.48644843,0.45977205,0.37977197,0.30657647,0.2663399,0.24830017,0.28077959,0.29427801,0.23659696,0.2008881,0.20489693,0.25935467,0.36960378,0.49622958,0.56211574,0.60623229,0.64513373,0.70906712,0.76653165,0.81869541,0.89138698,0.93012472,0.9844845,1.0056291,0.99307283,1.0318076,1.0667882,0.96743436,0.78610325,0.65608147,0.61814653,0.56639671,0.44029941,0.36531335,0.33691582,0.29915953,0.24377098,0.21082367,0.20618339,0.1945911,0.17283177,0.18344096,0.25171741,0.30517045,0.38914035,0.54293201,0.70458043,0.80115213,0.83769501,0.84235836,0.86251309,0.85584698,0.9248002,0.93935346,0.87187682,0.95495924,0.96577364,0.8849799,0.88832158,0.88927531,0.8039175,0.68817419,0.59877019,0.59186781,0.55417595,0.50234826,0.47549106,0.46855348,0.47120229,0.45261281,0.37889611,0.25343076,0.10469812,-0.0080897152,-0.14934797,-0.27462936,-0.33528648,-0.37889461,-0.38869868,-0.37608491,-0.38247191,-0.38974721,-0.3801404,-0.27791277,-0.1610379,-0.10372529,-0.10768763,-0.11508729,-0.13256698,-0.20528163,-0.26701169,-0.26393716,-0.20524112,-0.10028647,0.029414521,0.093845522,0.18086986,0.25851385,0.3146011,0.43069359,0.50481691,0.72265819,0.90902706,1.0606044,1.1933333,1.2775484,1.3592403,1.4863414,1.5884313,1.6598276,1.7171002,1.6810351,1.5580737,1.5101635,1.4442901,1.3365941,1.2942419,1.3703119,1.5052041,1.6958972,1.76273,1.9074604,1.9208705,1.7359462,1.5246095,1.1832622,0.98110164,0.90110903,0.81369732,0.90988564,1.082728,1.1874398,1.2976492,1.6201012,1.8392803,1.6871314,1.3090197,0.78457753,0.40273191,0.11347856,-0.18381802,-0.42894055,-0.66943576,-0.83489958,-0.98897533,-1.1085428,-1.2070487,-1.2698997,-1.3112004,-1.332281,-1.3471201,-1.3496336,-1.3478952,-1.3667098,-1.4012382,-1.4506136,-1.5090741,-1.5740736,-1.6272218,-1.6739475,-1.7083169,-1.7320755,-1.748993,-1.761263,-1.7707709,-1.7776266,-1.7836583,-1.7873244,-1.7919059,-1.7965674,-1.7997507,-1.8017649,-1.8040426,-1.8061722,-1.8085788,-1.8116914,-1.8146963,-1.816815,-1.8193402,-1.8221028,-1.8243476,-1.8270876,-1.8299197,-1.8321217,-1.8341529,-1.8360855,-1.837943,-1.839142:1
-0.59182708,-0.57097984,-0.59002393,-0.66394766,-0.75591829,-0.83324754,-0.89181943,-0.93446406,-0.95917819,-0.97198653,-0.9639616,-0.93851611,-0.94161606,-0.96363598,-0.98209761,-1.0032796,-1.0119122,-1.0069522,-1.0093006,-1.0152972,-1.0207021,-1.0281125,-1.0462417,-1.0678617,-1.0829141,-1.091951,-1.0829189,-1.0654574,-1.0752452,-1.0903197,-1.0819331,-1.0671251,-1.0647403,-1.0703622,-1.0571501,-1.0299267,-1.0020078,-0.96347573,-0.91152956,-0.85559363,-0.79111451,-0.72389925,-0.6638173,-0.58384159,-0.50723513,-0.49799158,-0.52407087,-0.52080693,-0.52807144,-0.54058668,-0.48571616,-0.40544804,-0.33634258,-0.25260571,-0.13719216,0.01508169,0.14231607,0.2872904,0.40023766,0.43061297,0.43876729,0.44440605,0.50959508,0.58345889,0.63940936,0.67608713,0.69629033,0.77713482,0.86826476,0.88733044,0.98041673,1.1053344,1.1042587,1.0378532,0.94906608,0.85349828,0.7463665,0.74749185,0.7817249,0.73345258,0.79494078,0.8593449,0.80215686,0.74124059,0.64610151,0.58066145,0.6219531,0.62961767,0.66001775,0.7159011,0.69803259,0.71636898,0.72576046,0.66768441,0.62174234,0.58831841,0.53950901,0.53551149,0.51609501,0.45080579,0.36002762,0.30492518,0.27159577,0.23535129,0.25773682,0.30080311,0.29441472,0.25057817,0.25968361,0.30965032,0.41977163,0.534594,0.5892294,0.61300223,0.62793215,0.69737291,0.73976693,0.74320662,0.78672447,0.84807,0.89614984,0.92414105,0.9315135,0.93832853,0.92963424,0.84613746,0.75822178,0.67505215,0.58902597,0.54552847,0.50337898,0.41305665,0.3461111,0.31828373,0.27514008,0.29437722,0.28758668,0.24803702,0.24213297,0.25017658,0.28965442,0.36144717,0.44455246,0.51967585,0.64486601,0.7474978,0.75834951,0.81704013,0.82339933,0.75641558,0.86053321,0.88857037,0.85278311,0.86364825,0.882389,0.9143978,0.88867955,0.84043462,0.78134545,0.73830434,0.6598968,0.61026319,0.61573492,0.61872693,0.58980522,0.53523777,0.53469558,0.51553718,0.39254983,0.28863107,0.17210379,0.042124557,-0.12807053,-0.2119224,-0.27090031,-0.33617057,-0.337479,-0.32645375,-0.30881579,-0.31856817,-0.35955399,-0.23731766,-0.095789661,-0.041476424,-0.015699778,-0.054952743,-0.11740563,-0.18372554,-0.22737056,-0.19907116,-0.086769606,0.007987951,0.1274916,0.23151166,0.30722485,0.36608569,0.37857906,0.46171133,0.58397299,0.72627677,0.85061005,0.98151633,1.1162918,1.2367661,1.368625,1.5112068,1.5707192,1.5340066,1.5240846,1.501225,1.3749571,1.3294072,1.2937613,1.2514552,1.2667599,1.3424053,1.4002908,1.5064183,1.7409176,1.8994882,1.7968902,1.7142589,1.4904702,1.1573554,1.0607864,0.95877142,0.86810451,1.0387958,1.191567,1.2468527,1.3884701,1.6489038,1.7006547,1.6218215,1.3158293,0.83938885,0.50047677,0.2104603,-0.079537759,-0.32377172,-0.56785898,-0.73021983,-0.88466881,-1.0124587,-1.1190859,-1.1889413,-1.2348938,-1.2468463,-1.24628,-1.2432398,-1.2402935,-1.2578112,-1.2976229,-1.3588176,-1.4349968,-1.5284816,-1.6041904,-1.6706671,-1.7203159,-1.7539305,-1.7765943,-1.7910457,-1.8030906,-1.8113663,-1.8175071,-1.8228363,-1.8283443,-1.833362,-1.8371703,-1.8395359,-1.8418109,-1.8439131,-1.8467078,-1.8497292,-1.8530414,-1.8560154,-1.8583069,-1.8602528,-1.8631058,-1.8669664,-1.8688181,-1.8701928,-1.8723216,-1.8736945,-1.8752949,-1.8771268:1
-0.69637574,-0.64382723,-0.65514167,-0.71097519,-0.80322595,-0.89365728,-0.94614686,-0.96945331,-0.98356211,-0.99518308,-1.0010637,-0.9922821,-0.98011293,-0.9930273,-1.0232553,-1.0439656,-1.0513228,-1.0521992,-1.0564046,-1.0608804,-1.0521403,-1.0578567,-1.0787669,-1.0970929,-1.1163718,-1.1146986,-1.0970442,-1.0932358,-1.1037925,-1.1112089,-1.1072335,-1.0973472,-1.0899435,-1.07852,-1.0771457,-1.0654419,-1.0269527,-0.99913544,-0.95864181,-0.91080304,-0.85808827,-0.77656929,-0.693307,-0.62530373,-0.57220214,-0.5504745,-0.57284699,-0.57464043,-0.5531178,-0.56453643,-0.54011305,-0.47448867,-0.41211518,-0.29876074,-0.16784437,-0.032980401,0.12282981,0.24438668,0.3172026,0.41374009,0.51868826,0.56358127,0.56725669,0.58321022,0.62221379,0.62655667,0.64826123,0.74702005,0.82727567,0.88220261,0.89476335,0.88069678,0.91500407,0.83588637,0.73162133,0.65573806,0.62592935,0.62524552,0.61493883,0.62483493,0.63216604,0.66137074,0.66772241,0.65134633,0.58962616,0.53236837,0.52439474,0.5589285,0.61012247,0.71344485,0.77669255,0.69949151,0.62934372,0.59416627,0.59776964,0.54814334,0.46231293,0.44914981,0.43142221,0.38138334,0.29811999,0.21264994,0.1949452,0.19817707,0.20529365,0.20914252,0.1758822,0.15533182,0.19475864,0.26597916,0.32745012,0.41315488,0.52903707,0.59501671,0.6081572,0.63836014,0.74336702,0.87769498,0.87074035,0.85014461,0.85917275,0.85404221,0.87662399,0.93400801,0.93055791,0.79731219,0.69712191,0.60087667,0.49645454,0.44617864,0.39324076,0.32392251,0.26955839,0.27017388,0.25441225,0.19285416,0.19801499,0.18685589,0.16496315,0.19364693,0.24486085,0.33289891,0.43260237,0.54449496,0.64164492,0.75679989,0.86156057,0.93493641,0.94955953,0.90636924,0.93605519,0.9582106,0.94317712,0.96240104,0.97199977,0.96750211,0.92219781,0.81081397,0.74994296,0.6972681,0.6242358,0.56708916,0.53734379,0.51906626,0.49802952,0.52142948,0.49351411,0.38844075,0.29496029,0.23426632,0.11264819,-0.015359193,-0.15578739,-0.28449983,-0.36931449,-0.39572576,-0.37744683,-0.36010175,-0.35427856,-0.35395011,-0.34920939,-0.23024802,-0.11617668,-0.061137092,-0.031044945,-0.054495145,-0.11993181,-0.16827469,-0.20805421,-0.20270717,-0.066540867,0.04122649,0.12196337,0.20072035,0.34135055,0.45356288,0.51104517,0.6559614,0.74375012,0.88096815,1.1112896,1.2260592,1.3030072,1.4404326,1.574583,1.6598154,1.7127021,1.7349257,1.8363645,1.9806251,1.7301852,1.5101255,1.3985516,1.2958232,1.3484037,1.5231991,1.6049706,1.7051752,1.7734813,2.0278713,2.0418816,1.7781514,1.4913201,1.2465701,1.0398371,0.92422086,0.85117696,0.88497422,1.0260896,1.2311723,1.5283514,1.7327365,1.8023824,1.6218342,1.2598575,0.76959568,0.35832076,0.055193629,-0.23527461,-0.44734936,-0.63140038,-0.77528761,-0.91939158,-1.0320594,-1.124996,-1.1738397,-1.190349,-1.1864586,-1.1788013,-1.1621179,-1.1393323,-1.1378385,-1.1656012,-1.2255697,-1.3068174,-1.4134589,-1.5009303,-1.5719725,-1.6241434,-1.6599531,-1.683797,-1.6990561,-1.7107443,-1.7186597,-1.7252003,-1.7303781,-1.7348341,-1.7395217,-1.7437024,-1.7461595,-1.748269,-1.7503838,-1.7529982,-1.755782,-1.7582112,-1.7598465,-1.7624568,-1.7652921,-1.7676066,-1.7695512,-1.7715944,-1.774465,-1.7765743,-1.7773633,-1.7789851,-1.7804869:1

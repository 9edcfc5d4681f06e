#pragma once

// Frozen high-precision reference values for the cylinder and Kelvin
// functions, computed once with an independent arbitrary-precision
// implementation and checked in as literals.

namespace ref {

struct BesselRef { double nu, x, j, y, i, k; };
struct KelvinRef { double nu, x, ber, bei, ker, kei; };

inline constexpr BesselRef kBessel[] = {
    {0.0, 0.05, 0.999375097649468581, -1.97931100081720964, 1.00062509766303195, 3.11423402947198984},
    {0.0, 0.5, 0.938469807240812904, -0.444518733506706557, 1.06348337074132352, 0.924419071227665862},
    {0.0, 1.0, 0.765197686557966551, 0.0882569642156769580, 1.26606587775200834, 0.421024438240708333},
    {0.0, 3.0, -0.260051954901933438, 0.376850010012790382, 4.88079258586502409, 0.0347395043862792481},
    {0.0, 7.0, 0.300079270519555597, -0.0259497439672092649, 168.593908510289699, 0.000424795741869231807},
    {0.0, 11.9, 0.0250494416995896451, -0.229833213943375064, 17219.2402762680272, 2.44228863717227100e-6},
    {0.0, 12.1, 0.0696667736068073118, -0.218438380550925486, 20853.1174038806975, 1.98330135439853607e-6},
    {0.0, 25.0, 0.0962667832759581162, -0.127249432268006138, 5774560606.46631032, 3.46416156221311436e-12},
    {0.0, 60.0, -0.0914718040890618695, 0.0473589522094493992, 5.89407705560980117e+24, 1.41389784055910781e-27},
    {0.25, 0.05, 0.438476928708575332, -2.46143095007425613, 0.438915624958849799, 3.58773754526402722},
    {0.25, 0.5, 0.741656570157146063, -0.756843545694495992, 0.819675965988729463, 0.960316324931886023},
    {0.25, 1.0, 0.752231333340790057, -0.194421753677164395, 1.12385187167094597, 0.430739774448585525},
    {0.25, 3.0, -0.100637064336731275, 0.447380101274892424, 4.80775917369073074, 0.0350570560894131340},
    {0.25, 7.0, 0.267999983952762462, -0.137669896722959846, 167.778252395927170, 0.000426577486607748134},
    {0.25, 11.9, -0.0642368537138842392, -0.222117234756568490, 17171.9870222421123, 2.44846202506838491e-6},
    {0.25, 12.1, -0.0186430020510053400, -0.228543908980657372, 20796.8823633273701, 1.98823462403191012e-6},
    {0.25, 25.0, 0.0404364767126737190, -0.154356316594259213, 5767196111.73863096, 3.46841126147880234e-12},
    {0.25, 60.0, -0.0664267344389882070, 0.0787244708226720287, 5.89098198468115373e+24, 1.41462840455705530e-27},
    {0.5, 0.05, 0.178338082402197428, -3.56378885116903821, 0.178486759412983053, 5.33163256910575853},
    {0.5, 0.5, 0.540973789934528091, -0.990245880243404880, 0.587993086790416325, 1.07504760349992024},
    {0.5, 1.0, 0.671396707141803090, -0.431098868018376080, 0.937674888245487647, 0.461068504447894558},
    {0.5, 3.0, 0.0650081828773757781, 0.456048820794633179, 4.61482290340760095, 0.0360259851317645926},
    {0.5, 7.0, 0.198128774076344820, -0.227355823874828523, 165.356799548543657, 0.000431965980405261248},
    {0.5, 11.9, -0.142972134067080679, -0.181814269910605939, 17031.0302275251095, 2.46707369779928067e-6},
    {0.5, 12.1, -0.103138194655559954, -0.204879762619667027, 20629.1157015791953, 2.00310641745764623e-6},
    {0.5, 25.0, -0.0211202835996504450, -0.158173084042050562, 5745159748.34646576, 3.48119127684069516e-12},
    {0.5, 60.0, -0.0313974611825204130, 0.0981046837350379155, 5.88170657607518728e+24, 1.41682235003536945e-27},
    {1.0, 0.05, 0.0249921883137597005, -12.7898551711749697, 0.0250078133138444716, 19.9096743258825054},
    {1.0, 0.5, 0.242268457674873886, -1.47147239267024307, 0.257894305390896316, 1.65644112000330089},
    {1.0, 1.0, 0.440050585744933516, -0.781212821300288717, 0.565159103992485027, 0.601907230197234575},
    {1.0, 3.0, 0.339058958525936459, 0.324674424791799978, 3.95337021740260940, 0.0401564311281941844},
    {1.0, 7.0, -0.00468282348234583270, -0.302667237024184870, 156.039092869955453, 0.000454182486884896971},
    {1.0, 11.9, -0.228983249661924055, -0.0347114983340306098, 16479.0601923975036, 2.54291079534769704e-6},
    {1.0, 12.1, -0.215748973376924808, -0.0787369314513957456, 19971.9110479601269, 2.06368712333718531e-6},
    {1.0, 25.0, -0.125350249580289905, -0.0988299647832374101, 5657865129.87870135, 3.53277807319993377e-12},
    {1.0, 60.0, 0.0465983837581663179, 0.0918696093698668953, 5.84475158839046828e+24, 1.42563202651710432e-27},
    {1.5, 0.05, 0.00297279687491014738, -71.4541151057829577, 0.00297428364501308707, 111.964283951220923},
    {1.5, 0.5, 0.0917016996256513026, -2.52146555042133785, 0.0964034738340167409, 3.22514281049976072},
    {1.5, 1.0, 0.240297839123427011, -1.10249557516017917, 0.293525326347479800, 0.922137008895789117},
    {1.5, 3.0, 0.477718215087091772, 0.0870080907208352815, 3.09948345672563581, 0.0480346468423527901},
    {1.5, 7.0, -0.199051713292493549, -0.230608177487034609, 141.734674611121536, 0.000493675406177441427},
    {1.5, 11.9, -0.193828734958259778, 0.127693623990559172, 15599.8512183793017, 2.67439081526140509e-6},
    {1.5, 12.1, -0.213403580359795949, 0.0862059828688106122, 18924.2301076825781, 2.16865240237150130e-6},
    {1.5, 25.0, -0.159017895386036580, 0.0147933602379684225, 5515353358.41260713, 3.62043892791432296e-12},
    {1.5, 60.0, 0.0975813927153292419, 0.0330325392447710449, 5.78367813314060082e+24, 1.44043605586929227e-27},
    {2.0, 0.05, 0.000312434900919384467, -509.614895846181550, 0.000312565109253141655, 799.501207064772162},
    {2.0, 0.5, 0.0306040234586826413, -5.44137083717426572, 0.0319061491777382538, 7.55018355124086944},
    {2.0, 1.0, 0.114903484931900480, -1.65068260681625439, 0.135747669767038281, 1.62483889863517748},
    {2.0, 3.0, 0.486091260585891077, -0.160400393484923730, 2.24521244092995115, 0.0615104584717420377},
    {2.0, 7.0, -0.301417220085940120, -0.0605266094682721266, 124.011310547445284, 0.000554562166693488084},
    {2.0, 11.9, -0.0635340214747029305, 0.223999348677151432, 14449.6503279659259, 2.86966860277692595e-6},
    {2.0, 12.1, -0.105327760941836207, 0.205424011715984040, 17551.9750819038169, 2.32440666404104605e-6},
    {2.0, 25.0, -0.106294803242381309, 0.119343035085347145, 5321931396.07601421, 3.74678380806910906e-12},
    {2.0, 60.0, 0.0930250835476674135, -0.0442966318971205027, 5.69925200266345223e+24, 1.46141890810967795e-27},
    {3.5, 0.05, 2.12366230382791686e-7, -428296.857634475012, 2.12425229196263969e-7, 672430.831248187262},
    {3.5, 0.5, 0.000662378568145942361, -138.864008672424884, 0.000681035970857938159, 207.484187475484606},
    {3.5, 1.0, 0.00718621201896270046, -13.2794437121506280, 0.00803078033223856303, 17.0595346645720987},
    {3.5, 3.0, 0.210131838595768218, -0.702075974177165110, 0.573917712255693914, 0.188135700132548428},
    {3.5, 7.0, -0.00340303756586302133, 0.322410854493432143, 67.0108406308724556, 0.000953347659378375408},
    {3.5, 11.9, 0.233369805169525957, -0.0377751618795540136, 10096.3660812982024, 3.99426050841851455e-6},
    {3.5, 12.1, 0.234159041539117293, 0.00728705299979135996, 12338.6277012192036, 3.21856514256520475e-6},
    {3.5, 25.0, 0.159425522616701791, 0.0171962972161529320, 4498689889.34521655, 4.40356771755240575e-12},
    {3.5, 60.0, -0.0945583484804720023, -0.0410702939758376585, 5.31763457735575439e+24, 1.56450640193836178e-27},
    {5.0, 0.05, 8.13717316067309677e-11, -782400620.015300259, 8.13886858168201226e-11, 1228608019.99791665},
    {5.0, 0.5, 8.05362724135747409e-6, -7946.30147880747334, 8.22317131310926396e-6, 12097.9794760963934},
    {5.0, 1.0, 0.000249757730211234431, -260.405866625812221, 0.000271463155956971875, 360.960589601240701},
    {5.0, 3.0, 0.0430284348770475839, -1.90594595382867373, 0.0912064776615133485, 0.937773602386808031},
    {5.0, 7.0, 0.347896324751183285, 0.0637022352485902858, 26.8854863897738534, 0.00216019941287395262},
    {5.0, 11.9, -0.0945381715083846967, -0.223305862663833083, 5847.37886357864409, 6.62559514033037219e-6},
    {5.0, 12.1, -0.0519744697665968227, -0.234385952076486893, 7210.44850731447849, 5.29737318716288080e-6},
    {5.0, 25.0, -0.0660079953984229934, -0.147057993113722661, 3472466208.74191673, 5.64859213652841424e-12},
    {5.0, 60.0, 0.0274547442283440998, 0.0994646328404508856, 4.77776520725617212e+24, 1.73822327418869880e-27},
    {7.5, 0.05, 6.87581297896249577e-17, -617269238313690.241, 6.87682420228286028e-17, 969417807758315.599},
    {7.5, 0.5, 2.15854650717661785e-9, -19706633.6996105823, 2.19052440502018535e-9, 30365503.2705581986},
    {7.5, 1.0, 3.82197412134804220e-7, -112065.162424278787, 4.05354150353520597e-7, 162997.859829428580},
    {7.5, 3.0, 0.00113991407287038528, -40.7353760635033430, 0.00193597895768913968, 31.9448192111587666},
    {7.5, 7.0, 0.177161002822821076, -0.500361332243798690, 3.30202213207356525, 0.0147461845451390286},
    {7.5, 11.9, -0.0491292025229231974, 0.256679827538708098, 1588.52524257218581, 0.0000223723971854340503},
    {7.5, 12.1, -0.0875983933715522308, 0.242568915041636222, 1999.14141088604018, 0.0000175657157442256328},
    {7.5, 25.0, 0.0889690340906247662, 0.137001087941813704, 1848198842.63039506, 1.03659931904780410e-11},
    {7.5, 60.0, -0.0737377689455513842, -0.0725019656347735925, 3.67612216488728350e+24, 2.24944628178802390e-27},
};

inline constexpr KelvinRef kKelvin[] = {
    {0.0, 0.1, 0.999998437500067817, 0.00249999956597222928, 2.42047398103817137, -0.776850646536661068},
    {0.0, 1.0, 0.984381781213086884, 0.249566040036659721, 0.286706208728316046, -0.494994636518719900},
    {0.0, 4.0, -2.56341655725857975, 2.29269032269929983, -0.0361788478995476112, 0.00219839929497251990},
    {0.0, 9.0, 73.9357298576161798, -24.7127831686782748, 0.000637164191121271846, -0.000319152916191274351},
    {0.0, 15.0, -2967.25453463512921, -2952.70788734411728, -1.51434720734720696e-8, 7.96289439837762662e-6},
    {0.5, 0.1, 0.0961675092175509365, 0.233267782051414615, 1.16858537881538834, -3.50297864748307220},
    {0.5, 1.0, 0.180081605844156982, 0.781837294771886730, -0.191109225040075708, -0.587676898930199349},
    {0.5, 4.0, -3.35517711404415625, -0.260480373854741889, -0.0240269281004696418, 0.0281885926736005353},
    {0.5, 9.0, 68.7076882882565878, 35.2020854779636436, 0.000220845171308157736, -0.000684898415973699868},
    {0.5, 15.0, 15.5079572605087412, -4161.50114786444074, 5.68490355019047892e-6, 5.64269093875824199e-6},
    {1.0, 0.1, -0.0353995148150766238, 0.0353111264751009049, -7.14668171405197084, -6.94024215596479504},
    {1.0, 1.0, -0.395868261019711391, 0.307556631375536554, -0.740322276841982710, -0.241995966429738205},
    {1.0, 4.0, -1.86924845903189934, -2.56382168856107805, 0.00535129646027744791, 0.0391660107691713310},
    {1.0, 9.0, 20.7192091462532624, 72.0542909032159180, -0.000355781799872335821, -0.000650050533619424344},
    {1.0, 15.0, 2954.86529135246278, -2826.09360425738266, 8.15074977761545045e-6, -1.67969487368450004e-7},
    {1.5, 0.1, -0.00776701367144290519, -0.00322630579778728363, -36.5359246649107952, 15.3380677234961046},
    {1.5, 1.0, -0.234667855171148498, -0.125971038110326576, -0.868092590337281143, 0.741794174393444467},
    {1.5, 4.0, 0.822846654028714649, -2.73395854746007922, 0.0374190798792335521, 0.0232912427902984734},
    {1.5, 9.0, -37.8346748451331286, 60.5442014568353326, -0.000756060352927392212, -0.000184385705070977192},
    {1.5, 15.0, 3964.59504669119845, 210.951946990212825, 5.64070101717188682e-6, -6.21889147536827924e-6},
    {2.5, 0.1, 0.000155450647920230557, -0.0000642597181317112759, 1099.24496817304063, 453.177430344382704},
    {2.5, 1.0, 0.0504991634671453966, -0.0168066737750587509, 3.60619476989078003, 0.855596298031217606},
    {2.5, 4.0, 1.46889630604492326, 1.27400050844342722, 0.0165345110436560363, -0.0603851033093376436},
    {2.5, 9.0, -45.5195647687117750, -40.5547722328539731, -0.0000861001645975901813, 0.000906563677623967926},
    {2.5, 15.0, -546.353255251040508, 3570.98962898539514, -7.36210320490732311e-6, -5.56092245999663677e-6},
};

}  // namespace ref

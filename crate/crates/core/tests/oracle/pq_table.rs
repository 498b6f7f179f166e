// (Re ν, Im ν, x, P_ν(x), Q_ν(x)) from mpmath at 30 digits.
pub type Row = (f64, f64, f64, [f64; 2], [f64; 2]);
pub const TABLE: &[Row] = &[
    (-0.5, 0.0, 1.0001, [9.99987500351550263e-01, 0.00000000000000000e+00], [6.33797141372929040e+00, 0.00000000000000000e+00]),
    (-0.5, 0.0, 1.1, [9.87839804605800897e-01, 0.00000000000000000e+00], [2.86119287219889529e+00, 0.00000000000000000e+00]),
    (-0.5, 0.0, 1.5, [9.45006330929758054e-01, 0.00000000000000000e+00], [2.01890581997842311e+00, 0.00000000000000000e+00]),
    (-0.5, 0.0, 2.0, [9.01286299360447352e-01, 0.00000000000000000e+00], [1.65663817023659421e+00, 0.00000000000000000e+00]),
    (-0.5, 0.0, 3.0, [8.34626841674073194e-01, 0.00000000000000000e+00], [1.31102877714605981e+00, 0.00000000000000000e+00]),
    (-0.5, 0.0, 9.0, [6.42637681773124525e-01, 0.00000000000000000e+00], [7.42206236711193235e-01, 0.00000000000000000e+00]),
    (-0.5, 0.0, 30.0, [4.50504033748037380e-01, 0.00000000000000000e+00], [4.05662414368381630e-01, 0.00000000000000000e+00]),
    (-0.5, 0.0, 49.9, [3.81703649851685034e-01, 0.00000000000000000e+00], [3.14497582020468014e-01, 0.00000000000000000e+00]),
    (-0.5, 0.0, 50.1, [3.81195252399735340e-01, 0.00000000000000000e+00], [3.13869026204211476e-01, 0.00000000000000000e+00]),
    (-0.5, 0.0, 200.0, [2.34842211987493527e-01, 0.00000000000000000e+00], [1.57080369000334757e-01, 0.00000000000000000e+00]),
    (-0.5, 0.0, 10000.0, [5.08218743948231216e-02, 0.00000000000000000e+00], [2.22144147324438573e-02, 0.00000000000000000e+00]),
    (-0.5, 0.0, 100000000.0, [9.22829728848528850e-04, 0.00000000000000000e+00], [2.22144146907918305e-04, 0.00000000000000000e+00]),
    (-0.5, 0.0, 1000000000000.0, [1.33744071456106212e-05, 0.00000000000000000e+00], [2.22144146907918318e-06, 0.00000000000000000e+00]),
    (-0.5, 0.01, 1.0001, [9.99987495351706501e-01, -1.79609788518195547e-48], [6.33713026904547405e+00, -4.93311766869148419e-02]),
    (-0.5, 0.01, 1.1, [9.87834955451482033e-01, -2.13821176807375652e-47], [2.86034310641153855e+00, -4.87316700972830336e-02]),
    (-0.5, 0.01, 1.5, [9.44984648450929665e-01, -1.00495953099466556e-46], [2.01804327377599080e+00, -4.66177875981930584e-02]),
    (-0.5, 0.01, 2.0, [9.01247862713442260e-01, -3.36383475353363375e-46], [1.65577200270319880e+00, -4.44601735130540354e-02]),
    (-0.5, 0.01, 3.0, [8.34563792343970268e-01, 7.63631820890540709e-40], [1.31016745578199889e+00, -4.11705287196037981e-02]),
    (-0.5, 0.01, 9.0, [6.42511760153074429e-01, 0.00000000000000000e+00], [7.41407022626035417e-01, -3.16962575140843986e-02]),
    (-0.5, 0.01, 30.0, [4.50332892594196621e-01, 0.00000000000000000e+00], [4.04986840190816433e-01, -2.22157292923751415e-02]),
    (-0.5, 0.01, 49.9, [3.81522931285184441e-01, 0.00000000000000000e+00], [3.13882087418849764e-01, -1.88212104859566895e-02]),
    (-0.5, 0.01, 50.1, [3.81014480225082164e-01, 0.00000000000000000e+00], [3.13254009942290801e-01, -1.87961276832225091e-02]),
    (-0.5, 0.01, 200.0, [2.34660182452261445e-01, 0.00000000000000000e+00], [1.56627326644499770e-01, -1.15762076783417732e-02]),
    (-0.5, 0.01, 10000.0, [5.07212469143828310e-02, 0.00000000000000000e+00], [2.20693697772914137e-02, -2.50217008207090060e-03]),
    (-0.5, 0.01, 100000000.0, [9.16519688380877879e-04, 0.00000000000000000e+00], [2.17456955625618527e-04, -4.52135600642199247e-05]),
    (-0.5, 0.01, 1000000000000.0, [1.31805753267822774e-05, 0.00000000000000000e+00], [2.12376822180408427e-06, -6.50221421070870322e-07]),
    (-0.5, 1.0, 1.0001, [9.99937502538960188e-01, -4.27642353614751303e-49], [4.42597563211005429e+00, -1.56484271300683764e+00]),
    (-0.5, 1.0, 1.1, [9.39940856744513775e-01, -1.28292706084425391e-48], [8.78069350313214980e-01, -1.47095153107006049e+00]),
    (-0.5, 1.0, 1.5, [7.40377299216014140e-01, -2.48032565096555756e-48], [-2.94880976767310371e-02, -1.15864643401423151e+00]),
    (-0.5, 1.0, 2.0, [5.56413548935075997e-01, -6.58569224566717007e-48], [-3.58183722136296456e-01, -8.70754107390228960e-01]),
    (-0.5, 1.0, 3.0, [3.15499878150438395e-01, -7.99412822639647841e-40], [-5.52594830291991967e-01, -4.93738542683593906e-01]),
    (-0.5, 1.0, 9.0, [-1.03715536892492646e-01, 0.00000000000000000e+00], [-3.85338102676823002e-01, 1.62308646010089375e-01]),
    (-0.5, 1.0, 30.0, [-1.45891453525996917e-01, 0.00000000000000000e+00], [7.99653025401893432e-03, 2.28311446825884889e-01]),
    (-0.5, 1.0, 49.9, [-9.68331128315267076e-02, 0.00000000000000000e+00], [9.16693028533700910e-02, 1.51538061736292862e-01]),
    (-0.5, 1.0, 50.1, [-9.64049072947231050e-02, 0.00000000000000000e+00], [9.20904270135121938e-02, 1.50867945541795806e-01]),
    (-0.5, 1.0, 200.0, [1.99989150801630315e-02, 0.00000000000000000e+00], [8.27362007894445750e-02, -3.12971125213061321e-02]),
    (-0.5, 1.0, 10000.0, [-7.23672184809433412e-03, 0.00000000000000000e+00], [-5.31390052256651858e-03, 1.13250392362462347e-02]),
    (-0.5, 1.0, 100000000.0, [6.34839853092834111e-05, 0.00000000000000000e+00], [7.60213704617071647e-05, -9.93486608429256678e-05]),
    (-0.5, 1.0, 1000000000000.0, [-5.16927068355544954e-07, 0.00000000000000000e+00], [-9.54213839625027751e-07, 8.08960114025370915e-07]),
    (-0.5, 5.0, 1.0001, [9.98737929964411797e-01, -1.02634164867540313e-48], [2.76204004652023727e+00, -1.56881387181876542e+00]),
    (-0.5, 5.0, 1.1, [1.00840282281950730e-01, -4.10536659470161251e-48], [-8.04697680604966714e-01, -1.58399545001441516e-01]),
    (-0.5, 5.0, 1.5, [-2.21796226362655946e-01, -7.69756236506552346e-48], [3.98216957118602222e-01, 3.48396697667413546e-01]),
    (-0.5, 5.0, 2.0, [2.36104983562698267e-01, -1.59082955544687485e-47], [2.08681508317366066e-01, -3.70872840918239022e-01]),
    (-0.5, 5.0, 3.0, [-3.12479410295707499e-02, -1.59783177126185683e-39], [-3.29539900536446662e-01, 4.90841509891510389e-02]),
    (-0.5, 5.0, 9.0, [5.83893986317775490e-02, 0.00000000000000000e+00], [-1.63431330614115161e-01, -9.17178528945549743e-02]),
    (-0.5, 5.0, 30.0, [4.49158406165108617e-02, 0.00000000000000000e+00], [-7.41614882591750818e-02, -7.05536374553170781e-02]),
    (-0.5, 5.0, 49.9, [-4.93685880782567116e-02, 0.00000000000000000e+00], [1.68326312994884313e-02, 7.75479968123724411e-02]),
    (-0.5, 5.0, 50.1, [-4.90461321712845552e-02, 0.00000000000000000e+00], [1.83436966112732053e-02, 7.70414842581472886e-02]),
    (-0.5, 5.0, 200.0, [-1.62213376675992629e-02, 0.00000000000000000e+00], [3.03572741039284458e-02, 2.54804176239634590e-02]),
    (-0.5, 5.0, 10000.0, [4.39285693149147271e-05, 0.00000000000000000e+00], [5.60456646853112021e-03, -6.90028353212199236e-05]),
    (-0.5, 5.0, 100000000.0, [3.11256572448193031e-05, 0.00000000000000000e+00], [-2.74072678956286342e-05, -4.88920680692369049e-05]),
    (-0.5, 5.0, 1000000000000.0, [-3.02081022704141471e-07, 0.00000000000000000e+00], [-2.98331443606615290e-07, 4.74507760858089592e-07]),
    (-0.5, 10.0, 1.0001, [9.94993902821214693e-01, -2.13821176807375652e-48], [2.05700795764755862e+00, -1.56293276773488254e+00]),
    (-0.5, 10.0, 1.1, [-3.29805442695353113e-01, -6.41463530422126955e-48], [2.69263484879092740e-01, 5.18057177942825464e-01]),
    (-0.5, 10.0, 1.5, [-1.96490369770369877e-01, -2.05268329735080626e-47], [-2.12359037001290357e-01, 3.08646351085868020e-01]),
    (-0.5, 10.0, 2.0, [1.87984689177587150e-01, -4.01983812397866225e-47], [5.88143989605892162e-02, -2.95285659253834265e-01]),
    (-0.5, 10.0, 3.0, [-6.52433266932746642e-02, 3.33440007840298560e-40], [2.12189765847126316e-01, 1.02483977917675259e-01]),
    (-0.5, 10.0, 9.0, [-8.26902939008246490e-02, 0.00000000000000000e+00], [-2.62764995255666198e-02, 1.29889609921005789e-01]),
    (-0.5, 10.0, 30.0, [-3.53037393814108411e-02, 0.00000000000000000e+00], [-4.65149071379910156e-02, 5.54549841424444856e-02]),
    (-0.5, 10.0, 49.9, [1.12477897815990834e-02, 0.00000000000000000e+00], [-5.32575008686157828e-02, -1.76679868734970144e-02]),
    (-0.5, 10.0, 50.1, [9.86293251263388460e-03, 0.00000000000000000e+00], [-5.38137784968367797e-02, -1.54926581622712653e-02]),
    (-0.5, 10.0, 200.0, [-1.49860788136609007e-02, 0.00000000000000000e+00], [-1.52076528606320364e-02, 2.35400775535573661e-02]),
    (-0.5, 10.0, 10000.0, [-1.66976981619898555e-03, 0.00000000000000000e+00], [2.97128343637257514e-03, 2.62286829387835610e-03]),
    (-0.5, 10.0, 100000000.0, [-6.82769585733780477e-06, 0.00000000000000000e+00], [-3.81545859228447080e-05, 1.07249195731789571e-05]),
    (-0.5, 10.0, 1000000000000.0, [2.41076897362107596e-07, 0.00000000000000000e+00], [1.16957435530344397e-07, -3.78682704851508896e-07]),
    (-0.2, 3.0, 1.0001, [9.99542061861018460e-01, 8.99771425437738588e-05], [3.27371910591898896e+00, -1.46912431276056799e+00]),
    (-0.2, 3.0, 1.1, [5.99182439243206799e-01, 6.94996249316862935e-02], [-3.63790869716317466e-01, -8.31615590609416699e-01]),
    (-0.2, 3.0, 1.5, [-2.12785697926224870e-01, 1.04230196630724262e-01], [-4.60797296310636983e-01, 2.10392675964241077e-01]),
    (-0.2, 3.0, 2.0, [-3.76283447704161333e-01, -1.53109248489889209e-02], [-2.66647489818589815e-02, 3.66053470524553504e-01]),
    (-0.2, 3.0, 3.0, [-7.09233261475669396e-02, -1.51413190751264332e-01], [2.40170615367163692e-01, 7.50660989054603850e-02]),
    (-0.2, 3.0, 9.0, [-3.38831535506897274e-03, 1.51248737049610033e-01], [-1.00826246434758529e-01, -6.97429028309131966e-03]),
    (-0.2, 3.0, 30.0, [7.50732354153969550e-02, -1.14392884210271037e-01], [3.52523557172393573e-02, -1.53189247650019796e-02]),
    (-0.2, 3.0, 49.9, [1.23714102577773807e-01, 5.54566106246493426e-02], [-9.15757292528694353e-03, -2.38825369853309585e-02]),
    (-0.2, 3.0, 50.1, [1.22853088819760550e-01, 5.67167586529841936e-02], [-9.41337525243612569e-03, -2.36949363745656144e-02]),
    (-0.2, 3.0, 200.0, [-8.48642635069863163e-03, -9.54812657886616734e-02], [8.28541200490900270e-03, 1.51676194715841955e-03]),
    (-0.2, 3.0, 10000.0, [-3.56882038011210531e-02, -2.75084638282942426e-02], [1.95506524135995207e-04, 3.12215989874521291e-04]),
    (-0.2, 3.0, 100000000.0, [7.13420763141528642e-03, 1.12809583093554855e-04], [1.94683371638402769e-08, -2.31613414115046573e-07]),
    (-0.2, 3.0, 1000000000000.0, [-9.15399198462732368e-04, 6.63935482514505177e-04], [-9.74892302641073302e-11, 1.09558696881820769e-10]),
    (-0.9, 0.5, 1.0001, [9.99983000397237531e-01, -1.99993300244785056e-05], [4.98399827045456156e+00, -2.56079213560790375e+00]),
    (-0.9, 0.5, 1.1, [9.83385181500674110e-01, -1.93535597646936723e-02], [1.46282841701625910e+00, -2.56729601531737028e+00]),
    (-0.9, 0.5, 1.5, [9.23604864675702797e-01, -8.58120680090902477e-02], [4.80927049535997742e-01, -2.51638804957180628e+00]),
    (-0.9, 0.5, 2.0, [8.60484366998129580e-01, -1.50658000575874612e-01], [-1.19846668861238823e-02, -2.42167145921312210e+00]),
    (-0.9, 0.5, 3.0, [7.59905652455435288e-01, -2.42913144451040897e-01], [-5.37391501312252329e-01, -2.22622535034685320e+00]),
    (-0.9, 0.5, 9.0, [4.38265500721167878e-01, -4.49872627107629819e-01], [-1.46467381709553335e+00, -1.40952582936746862e+00]),
    (-0.9, 0.5, 30.0, [7.01387526125118455e-02, -5.21380806638417460e-01], [-1.77671699548598516e+00, -2.90801937291448098e-01]),
    (-0.9, 0.5, 49.9, [-6.74190849327353375e-02, -4.95002906916979901e-01], [-1.70365248584822071e+00, 1.57698087121789898e-01]),
    (-0.9, 0.5, 50.1, [-6.84284358875375254e-02, -4.94673303778761120e-01], [-1.70265191063052224e+00, 1.61041564625963862e-01]),
    (-0.9, 0.5, 200.0, [-3.28643263279745135e-01, -2.93274521989970005e-01], [-1.05178048018371428e+00, 1.05413506819593250e+00]),
    (-0.9, 0.5, 10000.0, [-1.02055484257708468e-01, 2.80920289799197698e-01], [9.27873851802515026e-01, 3.91271617141140393e-01]),
    (-0.9, 0.5, 100000000.0, [-1.06863861738012419e-01, -5.23382880854360855e-02], [-1.94403605240255906e-01, 3.50602738595757357e-01]),
    (-0.9, 0.5, 1000000000000.0, [2.52693073809239742e-02, -4.00692047002344925e-02], [-1.30493805604062041e-01, -9.18857132784951514e-02]),
    (0.5, 2.0, 1.0001, [9.99837500664500611e-01, 1.99978751106701536e-04], [3.57419598009533557e+00, -1.09910351838767162e+00]),
    (0.5, 2.0, 1.1, [8.38569341040871663e-01, 1.79811348199785309e-01], [1.58829353253095107e-01, -7.26421051843298193e-01]),
    (0.5, 2.0, 1.5, [2.42108061732787233e-01, 5.82546828362828895e-01], [-2.18946295009480901e-01, -1.93305236534118796e-01]),
    (0.5, 2.0, 2.0, [-3.36994982826724077e-01, 6.45925813486843636e-01], [-1.65547591489449336e-01, -1.46731383298653656e-03]),
    (0.5, 2.0, 3.0, [-9.45317130517764892e-01, 1.93445308181925429e-01], [-5.26529527797973754e-02, 6.44159629766836161e-02]),
    (0.5, 2.0, 9.0, [7.26203735785586169e-01, -1.46787498911530956e+00], [1.52217245896980897e-02, 8.10341606368810183e-05]),
    (0.5, 2.0, 30.0, [7.98779949402194323e-01, 2.88912326955608290e+00], [-1.84844080439891187e-03, -1.66470963920211474e-03]),
    (0.5, 2.0, 49.9, [-2.63139904586240059e+00, 2.83261594554303509e+00], [-1.11247895202375483e-03, 3.25766906228011860e-04]),
    (0.5, 2.0, 50.1, [-2.65929844516052061e+00, 2.81710285043734299e+00], [-1.10319588715712853e-03, 3.32655607058013564e-04]),
    (0.5, 2.0, 200.0, [2.89778870623680884e+00, -7.17772348177485942e+00], [1.43977297653087528e-04, 1.15341333593237671e-05]),
    (0.5, 2.0, 10000.0, [5.13448058816238770e+01, 1.89628471054977759e+01], [4.47919064640157838e-08, -4.06066044386157482e-07]),
    (0.5, 2.0, 100000000.0, [5.45803804096394924e+03, -4.10618093770916289e+02], [2.09597082099175889e-13, -3.50663669128709164e-13]),
    (0.5, 2.0, 1000000000000.0, [4.79297104552465607e+05, -2.64314491322438291e+05], [3.36437554979142123e-19, -2.31744940119421356e-19]),
    (1.0, 0.0, 1.0001, [1.00009999999999999e+00, 0.00000000000000000e+00], [3.95226395252070439e+00, 0.00000000000000000e+00]),
    (1.0, 0.0, 1.1, [1.10000000000000009e+00, 0.00000000000000000e+00], [6.74487340747882302e-01, 0.00000000000000000e+00]),
    (1.0, 0.0, 1.5, [1.50000000000000000e+00, 0.00000000000000000e+00], [2.07078434325575295e-01, 0.00000000000000000e+00]),
    (1.0, 0.0, 2.0, [2.00000000000000000e+00, 0.00000000000000000e+00], [9.86122886681096850e-02, 0.00000000000000000e+00]),
    (1.0, 0.0, 3.0, [3.00000000000000000e+00, 0.00000000000000000e+00], [3.97207708399179640e-02, 0.00000000000000000e+00]),
    (1.0, 0.0, 9.0, [9.00000000000000000e+00, 0.00000000000000000e+00], [4.14598091394390109e-03, 0.00000000000000000e+00]),
    (1.0, 0.0, 30.0, [3.00000000000000000e+01, 0.00000000000000000e+00], [3.70617480083281186e-04, 0.00000000000000000e+00]),
    (1.0, 0.0, 49.9, [4.98999999999999986e+01, 0.00000000000000000e+00], [1.33900537485398503e-04, 0.00000000000000000e+00]),
    (1.0, 0.0, 50.1, [5.01000000000000014e+01, 0.00000000000000000e+00], [1.32833350055579338e-04, 0.00000000000000000e+00]),
    (1.0, 0.0, 200.0, [2.00000000000000000e+02, 0.00000000000000000e+00], [8.33345833556551993e-06, 0.00000000000000000e+00]),
    (1.0, 0.0, 10000.0, [1.00000000000000000e+04, 0.00000000000000000e+00], [3.33333335333333349e-09, 0.00000000000000000e+00]),
    (1.0, 0.0, 100000000.0, [1.00000000000000000e+08, 0.00000000000000000e+00], [3.33333333333333347e-17, 0.00000000000000000e+00]),
    (1.0, 0.0, 1000000000000.0, [1.00000000000000000e+12, 0.00000000000000000e+00], [3.33333333333333354e-25, 0.00000000000000000e+00]),
    (2.0, 1.0, 1.0001, [1.00024999374934032e+00, 2.50024999687468985e-04], [3.38109191324242886e+00, -3.75673115932516732e-01]),
    (2.0, 1.0, 1.1, [1.24310906361293183e+00, 2.74684311573710094e-01], [2.81256859757748057e-01, -1.94952078250211741e-01]),
    (2.0, 1.0, 1.5, [2.02187971652839815e+00, 1.83451575900030250e+00], [2.61847316205763223e-02, -5.58851397851162779e-02]),
    (2.0, 1.0, 2.0, [2.36662280698136795e+00, 4.67271763162476805e+00], [1.68412038797300886e-03, -2.04883847438205868e-02]),
    (2.0, 1.0, 3.0, [2.22117306696840322e-01, 1.24171350163882899e+01], [-1.88788011511010589e-03, -4.94601510529629231e-03]),
    (2.0, 1.0, 9.0, [-1.03665399215856169e+02, 5.15966118755140357e+01], [-1.78730149054077313e-04, -1.45333357273845537e-05]),
    (2.0, 1.0, 30.0, [-9.49312057341498758e+02, -8.75886018118507195e+02], [-2.06436856457138554e-06, 4.32777055657685804e-06]),
    (2.0, 1.0, 49.9, [-1.11283416803645400e+03, -3.39682538080180984e+03], [6.65164377641789589e-08, 1.03917943589770392e-06]),
    (2.0, 1.0, 50.1, [-1.10806543998628104e+03, -3.42857345416391217e+03], [6.98302585040736547e-08, 1.02650980492753901e-06]),
    (2.0, 1.0, 200.0, [5.04259901825533161e+04, -2.74817074510564998e+04], [1.60544012964175435e-08, 1.91111852405485046e-09]),
    (2.0, 1.0, 10000.0, [-1.38315237592418969e+08, -3.84955352526985034e+07], [-1.02811715248813362e-13, 7.84754012620797230e-14]),
    (2.0, 1.0, 100000000.0, [1.43339067791189240e+16, 8.18064619069782625e+14], [1.17156341198169404e-25, -5.47998980425883615e-26]),
    (2.0, 1.0, 1000000000000.0, [-1.41796887153055320e+24, 2.25089786762576513e+23], [-1.26134324133477461e-37, 2.86141465679269000e-38]),
    (-0.75, 0.6, 1.0001, [9.99972625815443994e-01, -1.49994197099654280e-05], [4.99164596917253078e+00, -2.05560180046028185e+00]),
    (-0.75, 0.6, 1.1, [9.73412838123861035e-01, -1.44412840061446564e-02], [1.46490801714235674e+00, -2.03764748415357388e+00]),
    (-0.75, 0.6, 1.5, [8.80499102060292582e-01, -6.28310134121380648e-02], [5.02990011959621341e-01, -1.92043035083789326e+00]),
    (-0.75, 0.6, 2.0, [7.86979929840503911e-01, -1.08019758726719914e-01], [5.36909759231737754e-02, -1.77252534557840602e+00]),
    (-0.75, 0.6, 3.0, [6.47417080034865422e-01, -1.68046445781882769e-01], [-3.78778845855804291e-01, -1.51911620786679369e+00]),
    (-0.75, 0.6, 9.0, [2.74401497098296476e-01, -2.70823744417674706e-01], [-9.35347585450301500e-01, -7.07207245369515403e-01]),
    (-0.75, 0.6, 30.0, [-2.46620600938630211e-02, -2.45595192417111724e-01], [-8.63911321093777329e-01, 6.67835606279626876e-02]),
    (-0.75, 0.6, 49.9, [-1.00696182222405575e-01, -2.00661878346483108e-01], [-7.07759492128490653e-01, 2.84807505258001303e-01]),
    (-0.75, 0.6, 50.1, [-1.01173751071279197e-01, -2.00258322367730474e-01], [-7.06366710303638401e-01, 2.86219251788140394e-01]),
    (-0.75, 0.6, 200.0, [-1.68709377011150990e-01, -4.73397129804706274e-02], [-1.87492732719866634e-01, 5.05514372225471131e-01]),
    (-0.75, 0.6, 10000.0, [2.90869384553642009e-02, 5.72394558174677270e-02], [1.85031840240088785e-01, -8.29089008429737678e-02]),
    (-0.75, 0.6, 100000000.0, [-1.84346696371531110e-03, 6.18489146025493711e-03], [1.91437994474394080e-02, 6.67994154230393093e-03]),
    (-0.75, 0.6, 1000000000000.0, [-5.58740406925956425e-04, 3.23028961877599324e-04], [9.32855026932808860e-04, 1.80023561281571708e-03]),
    (-0.7, 0.0, 1.0001, [9.99989500290052513e-01, 0.00000000000000000e+00], [7.87698412634958522e+00, 0.00000000000000000e+00]),
    (-0.7, 0.0, 1.1, [9.89780422366369317e-01, 0.00000000000000000e+00], [4.39203500061639573e+00, 0.00000000000000000e+00]),
    (-0.7, 0.0, 1.5, [9.53699415318723931e-01, 0.00000000000000000e+00], [3.51381634683431754e+00, 0.00000000000000000e+00]),
    (-0.7, 0.0, 2.0, [9.16727548547043858e-01, 0.00000000000000000e+00], [3.11095971004446792e+00, 0.00000000000000000e+00]),
    (-0.7, 0.0, 3.0, [8.60041825599224818e-01, 0.00000000000000000e+00], [2.69897680867409928e+00, 0.00000000000000000e+00]),
    (-0.7, 0.0, 9.0, [6.94046596250832426e-01, 0.00000000000000000e+00], [1.91650859312659194e+00, 0.00000000000000000e+00]),
    (-0.7, 0.0, 30.0, [5.21792755944101128e-01, 0.00000000000000000e+00], [1.33367111621761869e+00, 0.00000000000000000e+00]),
    (-0.7, 0.0, 49.9, [4.57770013917366658e-01, 0.00000000000000000e+00], [1.14476772835908092e+00, 0.00000000000000000e+00]),
    (-0.7, 0.0, 50.1, [4.57290751624751246e-01, 0.00000000000000000e+00], [1.14339438306496066e+00, 0.00000000000000000e+00]),
    (-0.7, 0.0, 200.0, [3.14118481493548318e-01, 0.00000000000000000e+00], [7.54776909216319680e-01, 0.00000000000000000e+00]),
    (-0.7, 0.0, 10000.0, [1.01191195827901606e-01, 0.00000000000000000e+00], [2.33413666887506893e-01, 0.00000000000000000e+00]),
    (-0.7, 0.0, 100000000.0, [6.45061460337101582e-03, 0.00000000000000000e+00], [1.47274067245235438e-02, 0.00000000000000000e+00]),
    (-0.7, 0.0, 1000000000000.0, [4.07110681642293415e-04, 0.00000000000000000e+00], [9.29236543798511272e-04, 0.00000000000000000e+00]),
];

// Generated by generate_frozen.py (mpmath, 40 digits). Do not edit.
#pragma once

namespace ptcs_test::frozen {

struct RealCase { double order; double x; double value; };
struct ComplexCase { double order; double re; double im; double value_re; double value_im; };

inline constexpr RealCase kBesselJ[] = {
    {-0.5, 0.1, 2.5105273689585093144},
    {-0.5, 1.5, 4.6083165893097410739e-2},
    {-0.5, 2.5, -4.0427830223905687344e-1},
    {-0.5, 10, -2.1170886633139815292e-1},
    {-0.5, 29, -1.1083477941853019554e-1},
    {-0.5, 40, -8.4138655676395420896e-2},
    {-0.5, 120, 5.9302142771115389674e-2},
    {-0.3, 0.1, 1.8856587867457047622},
    {-0.3, 1.5, 2.6914922102578731631e-1},
    {-0.3, 2.5, -2.7714519924433368827e-1},
    {-0.3, 10, -2.4417837120487250338e-1},
    {-0.3, 29, -1.3595104816105795674e-1},
    {-0.3, 40, -5.074062577747558245e-2},
    {-0.3, 120, 6.9482319686023367173e-2},
    {0, 0.1, 9.9750156206604003228e-1},
    {0, 1.5, 5.1182767173591812875e-1},
    {0, 2.5, -4.8383776468197996327e-2},
    {0, 10, -2.459357644513483352e-1},
    {0, 29, -1.4784876468298405046e-1},
    {0, 40, 7.3668905842372895535e-3},
    {0, 120, 7.1823415829156127576e-2},
    {0.5, 0.1, 2.5189294032600094573e-1},
    {0.5, 1.5, 6.4983807475374727043e-1},
    {0.5, 2.5, 3.0200490606236568126e-1},
    {0.5, 10, -1.3726373575505048121e-1},
    {0.5, 29, -9.8326281405102760329e-2},
    {0.5, 40, 9.4000962389533577555e-2},
    {0.5, 120, 4.2289722539691499581e-2},
    {1, 0.1, 4.9937526036241997556e-2},
    {1, 1.5, 5.5793650791009964199e-1},
    {1, 2.5, 4.9709410246427403801e-1},
    {1, 10, 4.347274616886143667e-2},
    {1, 29, 6.9342045592652512482e-3},
    {1, 40, 1.2603831803758499921e-1},
    {1, 120, -1.1805211433001891117e-2},
    {1.5, 0.1, 8.4020343015001428999e-3},
    {1.5, 1.5, 3.8714221727606743622e-1},
    {1.5, 2.5, 5.2508026466400314595e-1},
    {1.5, 10, 1.979824927558931048e-1},
    {1.5, 29, 1.0744421799076803139e-1},
    {1.5, 40, 8.6488679736133760335e-2},
    {1.5, 120, -5.8949728416617960511e-2},
    {2.5, 0.1, 1.6808871900334127033e-4},
    {2.5, 1.5, 1.24446359798387602e-1},
    {2.5, 2.5, 3.2809141153443809388e-1},
    {2.5, 10, 1.9665848358181841265e-1},
    {2.5, 29, 1.0944120050759600496e-1},
    {2.5, 40, -8.751431140932354553e-2},
    {2.5, 120, -4.3763465750106948594e-2},
    {3.7, 0.1, 9.9437991190052292488e-7},
    {3.7, 1.5, 1.9805472861275310775e-2},
    {3.7, 2.5, 1.050187557405559974e-1},
    {3.7, 10, -1.5480863843407150082e-1},
    {3.7, 29, -1.1901718127506976112e-1},
    {3.7, 40, -6.9704832223434461673e-2},
    {3.7, 120, 6.8149424539271838588e-2},
};

inline constexpr RealCase kBesselIScaled[] = {
    {-0.5, 0.1, 2.2944493559446366647},
    {-0.5, 1.5, 3.4195239904516043447e-1},
    {-0.5, 2.5, 2.5401332552252007319e-1},
    {-0.5, 10, 1.261566263610361893e-1},
    {-0.5, 29, 7.4081721672268290847e-2},
    {-0.5, 40, 6.3078313050504001206e-2},
    {-0.5, 120, 3.6418281019735969018e-2},
    {-0.3, 0.1, 1.7184455276796167464},
    {-0.3, 1.5, 3.6468120152234801028e-1},
    {-0.3, 2.5, 2.6484875009554900849e-1},
    {-0.3, 10, 1.272270605859966851e-1},
    {-0.3, 29, 7.4290032748346490717e-2},
    {-0.3, 40, 6.320621825484737047e-2},
    {-0.3, 120, 3.6442670075371238458e-2},
    {0, 0.1, 9.0710092578230109644e-1},
    {0, 1.5, 3.6743360905415833924e-1},
    {0, 2.5, 2.7004644161220273956e-1},
    {0, 10, 1.2783333716342860732e-1},
    {0, 29, 7.4407468222225585054e-2},
    {0, 40, 6.3278279875235330262e-2},
    {0, 120, 3.6456396116413918393e-2},
    {0.5, 0.1, 2.2868316607552338351e-1},
    {0.5, 1.5, 3.0951761682539946098e-1},
    {0.5, 2.5, 2.5061317888151193646e-1},
    {0.5, 10, 1.2615662584097981553e-1},
    {0.5, 29, 7.4081721672268290847e-2},
    {0.5, 40, 6.3078313050504001206e-2},
    {0.5, 120, 3.6418281019735969018e-2},
    {1, 0.1, 4.5298446808809325007e-2},
    {1, 1.5, 2.1903938742092567212e-1},
    {1, 2.5, 2.0658464953126655421e-1},
    {1, 10, 1.2126268138445551872e-1},
    {1, 29, 7.3113117939388365104e-2},
    {1, 40, 6.2482229074442060748e-2},
    {1, 120, 3.6304175332028956452e-2},
    {1.5, 0.1, 7.6176951894028295956e-3},
    {1.5, 1.5, 1.3560732116156079381e-1},
    {1.5, 2.5, 1.537680539699152986e-1},
    {1.5, 10, 1.1354096377693820774e-1},
    {1.5, 29, 7.1527179545638349784e-2},
    {1.5, 40, 6.1501355224241401176e-2},
    {1.5, 120, 3.611479534457150261e-2},
    {2.5, 0.1, 1.5231039343849564511e-4},
    {2.5, 1.5, 3.830297450227787336e-2},
    {2.5, 2.5, 6.6091514117613578139e-2},
    {2.5, 10, 9.2094336707898353207e-2},
    {2.5, 29, 6.6682358270995358111e-2},
    {2.5, 40, 5.8465711408685896118e-2},
    {2.5, 120, 3.5515411136121681453e-2},
    {3.7, 0.1, 9.0070984449664756325e-7},
    {3.7, 1.5, 5.6146537392008555878e-3},
    {3.7, 2.5, 1.6782311948463329817e-2},
    {3.7, 10, 6.2677427152326853008e-2},
    {3.7, 29, 5.8536243677155746001e-2},
    {3.7, 40, 5.3215472052017823562e-2},
    {3.7, 120, 3.4426962041183051063e-2},
};

inline constexpr RealCase kBesselKScaled[] = {
    {-0.5, 0.1, 3.9633272976060110133},
    {-0.5, 1.5, 1.0233267079464884885},
    {-0.5, 2.5, 7.9266545952120220267e-1},
    {-0.5, 10, 3.9633272976060110133e-1},
    {-0.5, 29, 2.3273459257088183491e-1},
    {-0.5, 40, 1.9816636488030055067e-1},
    {-0.5, 120, 1.1441140410797112417e-1},
    {-0.3, 0.1, 3.1000668397536310002},
    {-0.3, 1.5, 9.8121183880534981578e-1},
    {-0.3, 2.5, 7.7132095215582933663e-1},
    {-0.3, 10, 3.9331794366735790642e-1},
    {-0.3, 29, 2.3210411861291508353e-1},
    {-0.3, 40, 1.9777525028398199833e-1},
    {-0.3, 120, 1.143354701728030498e-1},
    {0, 0.1, 2.6823261022628943831},
    {0, 1.5, 9.5821005329489649642e-1},
    {0, 2.5, 7.5954869032809957869e-1},
    {0, 10, 3.9163193443659866573e-1},
    {0, 29, 2.3175021980076457865e-1},
    {0, 40, 1.9755558495729816883e-1},
    {0, 120, 1.142927794229293689e-1},
    {0.5, 0.1, 3.9633272976060110133},
    {0.5, 1.5, 1.0233267079464884885},
    {0.5, 2.5, 7.9266545952120220267e-1},
    {0.5, 10, 3.9633272976060110133e-1},
    {0.5, 29, 2.3273459257088183491e-1},
    {0.5, 40, 1.9816636488030055067e-1},
    {0.5, 120, 1.1441140410797112417e-1},
    {1, 0.1, 1.0890182683049696574e+1},
    {1, 1.5, 1.2431658735525529948},
    {1, 2.5, 9.0017442390787808913e-1},
    {1, 10, 4.1076657059578875113e-1},
    {1, 29, 2.357125956165556969e-1},
    {1, 40, 2.0000996725443348407e-1},
    {1, 120, 1.1476801537425147166e-1},
    {1.5, 0.1, 4.3596600273666121147e+1},
    {1.5, 1.5, 1.7055445132441474808},
    {1.5, 2.5, 1.1097316433296830837},
    {1.5, 10, 4.3596600273666121147e-1},
    {1.5, 29, 2.4075992334918810508e-1},
    {1.5, 40, 2.0312052400230806443e-1},
    {1.5, 120, 1.153648324755375502e-1},
    {2.5, 0.1, 1.3118613355075896454e+3},
    {2.5, 1.5, 4.4344157344347834501},
    {2.5, 2.5, 2.1243434315168219032},
    {2.5, 10, 5.2712253058159946477e-1},
    {2.5, 29, 2.5764079153803922509e-1},
    {2.5, 40, 2.134004041804736555e-1},
    {2.5, 120, 1.1729552491985956292e-1},
    {3.7, 0.1, 1.4997274912215955793e+5},
    {3.7, 1.5, 2.2225068598109700202e+1},
    {3.7, 2.5, 6.6414017366398200334},
    {3.7, 10, 7.4844578129312329654e-1},
    {3.7, 29, 2.9221224974737281664e-1},
    {3.7, 40, 2.3391280695604996304e-1},
    {3.7, 120, 1.2097272409067719398e-1},
};

inline constexpr ComplexCase kBesselIComplexScaled[] = {
    {-0.5, 1, 2, 3.0535897689476373436e-3, 2.4469964627799725529e-1},
    {-0.5, 0, 0.3, 9.8405824000167734231e-1, -9.8405824000167734231e-1},
    {-0.5, 5, -3, -1.5140742409284378721e-1, -6.6128807641975093616e-2},
    {-0.5, -4, 1, -1.5105613917355228937e-1, -1.2558667645336522777e-1},
    {-0.5, 0, 15, -1.1066611159115697437e-1, 1.1066611159115697437e-1},
    {-0.5, 0, 25, 1.1184526032732363881e-1, -1.1184526032732363881e-1},
    {-0.5, 30, 5, 1.4728514965745018386e-2, -7.082409999917893506e-2},
    {-0.5, -22, 3, -1.759574369119085718e-2, 8.281526393557302056e-2},
    {-0.5, 0, -40, -5.9495013988699201676e-2, -5.9495013988699201676e-2},
    {-0.5, 12, 12, 5.5614370175638596416e-2, -7.9280115982743431633e-2},
    {0.5, 1, 2, 6.3136869611795593007e-2, 2.8475652797426038277e-1},
    {0.5, 0, 0.3, 3.0440488535956537657e-1, 3.0440488535956537657e-1},
    {0.5, 5, -3, -1.5139254681621839437e-1, -6.6126883548450962742e-2},
    {0.5, -4, 1, 1.5117493046009445153e-1, 1.2552954156084654045e-1},
    {0.5, 0, 15, 9.4729461226236107343e-2, 9.4729461226236107343e-2},
    {0.5, 0, 25, -1.4934295753895855522e-2, -1.4934295753895855522e-2},
    {0.5, 30, 5, 1.4728514965745018386e-2, -7.082409999917893506e-2},
    {0.5, -22, 3, 1.7595743691190857181e-2, -8.2815263935573020547e-2},
    {0.5, 0, -40, 6.6468717943700802941e-2, -6.6468717943700802941e-2},
    {0.5, 12, 12, 5.5614370168436786901e-2, -7.9280115984006909469e-2},
    {1, 1, 2, -2.9405594861769261569e-2, 2.9085409182962508884e-1},
    {1, 0, 0.3, 0.0, 1.4831881627310400238e-1},
    {1, 5, -3, -1.4525759865948941306e-1, -5.6827508106167988898e-2},
    {1, -4, 1, -1.0939130350665454119e-1, 1.4005146616768028862e-1},
    {1, 0, 15, 0.0, 2.0510403861352276115e-1},
    {1, 0, 25, 0.0, -1.2535024958028990465e-1},
    {1, 30, 5, 1.4694173069899757141e-2, -6.9923513654532342754e-2},
    {1, -22, 3, 8.145102880680834993e-2, 1.7102514607120324663e-2},
    {1, 0, -40, 0.0, -1.2603831803758499921e-1},
    {1, 12, 12, 5.6018498387844364649e-2, -7.7150269200017595975e-2},
    {1.5, 1, 2, -1.2347639534311563437e-1, 2.1300308852786341594e-1},
    {1.5, 0, 0.3, -3.0624711196873950483e-2, 3.0624711196873950483e-2},
    {1.5, 5, -3, -1.3497853928591028475e-1, -4.3046100048124799592e-2},
    {1.5, -4, 1, -1.2286965798063868551e-1, -8.7157670764925191688e-2},
    {1.5, 0, 15, -1.1698140900623938152e-1, 1.1698140900623938152e-1},
    {1.5, 0, 25, 1.1244263215747947304e-1, -1.1244263215747947304e-1},
    {1.5, 30, 5, 1.4633666372256957979e-2, -6.8447488566958293824e-2},
    {1.5, -22, 3, -1.6306591251002382698e-2, 7.9226727271254493419e-2},
    {1.5, 0, -40, -6.1156731937291721749e-2, -6.1156731937291721749e-2},
    {1.5, 12, 12, 5.660044291795401819e-2, -7.3659512393058277618e-2},
    {2.5, 1, 2, -1.183809994157711255e-1, 8.7830004458035719688e-3},
    {2.5, 0, 0.3, -1.8422266091741395906e-3, -1.8422266091741395906e-3},
    {2.5, 5, -3, -1.0323774714399689217e-1, -1.1406343716243181664e-2},
    {2.5, -4, 1, 7.9824172608748060293e-2, 4.2323599024316048872e-2},
    {2.5, 0, 15, 7.1333179424988231039e-2, 7.1333179424988231039e-2},
    {2.5, 0, 25, -1.4411798949983187576e-3, -1.4411798949983187576e-3},
    {2.5, 30, 5, 1.4414658052232854266e-2, -6.3927041656897744991e-2},
    {2.5, -22, 3, 1.3966381484279198562e-2, -7.2506532335889906711e-2},
    {2.5, 0, -40, 6.188196304840392381e-2, -6.188196304840392381e-2},
    {2.5, 12, 12, 5.7746753852824819329e-2, -6.2997621570130372493e-2},
    {0.25, 1, 2, 7.9459450677280886994e-2, 2.5996220940083524651e-1},
    {0.25, 0, 0.3, 6.2297163679624491973e-1, 2.5804330093477050966e-1},
    {0.25, 5, -3, -1.5292050674899080053e-1, -6.8577975798567396131e-2},
    {0.25, -4, 1, 2.008012616778068729e-1, -1.7005932006405800616e-2},
    {0.25, 0, 15, 6.0130307254545136318e-2, 2.4906788774493901524e-2},
    {0.25, 0, 25, 3.7358433201708529009e-2, 1.5474369701157000745e-2},
    {0.25, 30, 5, 1.4736863880717653782e-2, -7.1051022196660899966e-2},
    {0.25, -22, 3, -4.6272307535050648989e-2, -7.1333484836209506245e-2},
    {0.25, 0, -40, 5.073184408365659553e-2, -2.1013817863647824264e-2},
    {0.25, 12, 12, 5.5506730224668938875e-2, -7.9816678125119125605e-2},
};

inline constexpr double kHyp0f1_2p5_1p3 = 1.6264430433366083729;
inline constexpr double kBesselJ_1p5_2 = 4.9129377868716234501e-1;
inline constexpr double kBesselI_1_3 = 3.9533702174026093965;
inline constexpr double kBesselI_1_1p2i_re = -7.9932694167776053867e-2;
inline constexpr double kBesselI_1_1p2i_im = 7.9062339255342833608e-1;

}  // namespace ptcs_test::frozen

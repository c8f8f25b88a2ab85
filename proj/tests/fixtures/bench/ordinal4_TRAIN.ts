# synthetic ordinal fixture
@problemName ordinal4
@timeStamps false
@missing false
@univariate true
@equalLength true
@seriesLength 32
@classLabel true 1 2 3 4
@data
-0.8718,-0.9214,-0.7348,-0.1585,0.5004,0.8762,1.0482,1.0609,1.2857,1.0393,0.4551,-0.0828,-0.3327,-0.6935,-0.7290,-1.3714,-1.0039,-0.4585,-0.6832,-0.2813,0.2429,0.3260,0.8406,0.9884,0.9647,0.5951,0.4260,0.2603,-0.4027,-0.5001,-0.7354,-1.2770:1
0.6821,0.2884,-0.1646,-0.6298,-0.8128,-0.6069,-1.0240,-0.7125,-0.6344,-0.2294,0.3300,0.3743,0.7860,0.8598,0.8080,0.8636,0.7990,0.2340,-0.2768,-0.8503,-0.6707,-0.9397,-1.1060,-0.6561,-0.2362,-0.5161,0.3185,0.7293,0.9506,1.3022,1.1048,0.6477:1
-0.6696,-0.4587,-0.0003,0.6517,1.0791,1.0885,0.6399,0.5940,0.5922,0.4166,-0.2482,-0.5427,-0.7749,-1.0072,-0.9618,-0.9203,-0.7354,-0.5333,-0.1960,-0.0269,0.9394,0.9513,1.0735,0.5913,0.8779,0.3922,0.2232,-0.4925,-0.4863,-0.6243,-1.0335,-0.9957:1
-0.8923,-0.4519,-0.9377,-0.5850,-0.6897,-0.4769,0.4043,0.6793,1.1633,0.5333,1.0114,0.3644,0.7448,0.1635,-0.5676,-0.5531,-0.7412,-0.9764,-0.6194,-0.5203,-0.4090,-0.0984,0.5192,0.5770,0.3949,0.9260,0.5802,0.9184,0.4142,0.1285,-0.1375,-0.7056:1
0.7782,0.8366,-0.0674,-0.4896,-0.6994,-0.7823,-1.0441,-0.9697,-0.5220,0.0509,0.2972,0.0643,0.7124,1.2055,0.7959,0.9617,0.8373,0.1426,-0.2964,-0.5639,-0.4565,-0.9605,-0.9498,-1.0434,-0.6947,-0.7541,-0.0619,0.4750,0.4063,0.9330,0.9686,1.0782:1
-0.9939,-0.8815,-0.6306,0.0006,0.2529,1.2628,1.1954,0.8267,0.5052,-0.3929,-0.5877,-1.2096,-0.5461,-0.2417,-0.0481,0.4856,1.0917,0.9513,0.8362,0.0640,-0.4566,-0.9030,-0.9804,-0.9033,-0.4925,0.4371,0.8539,0.6848,0.7772,0.6552,-0.1288,-0.8796:2
0.6179,0.9245,1.1142,0.0972,-0.0762,-0.3760,-0.9069,-0.7792,-0.9850,-0.1679,0.3486,0.6760,0.9512,0.7030,0.3821,-0.4888,-0.7967,-1.1222,-0.7850,-0.3114,0.1224,0.5225,0.5791,1.0383,0.3455,0.2440,-0.4666,-1.2297,-0.8980,-0.8286,-0.1621,0.4872:2
-0.9057,-0.6985,-0.4095,0.1661,0.7690,0.9932,1.1130,0.2350,-0.3208,-0.5061,-0.9862,-0.7943,-0.5994,-0.2330,0.1818,0.7133,1.2021,0.6017,0.3972,-0.1379,-0.8577,-0.6756,-0.9652,-0.7219,0.1398,0.6428,1.0747,0.6196,0.5433,-0.2918,-0.3681,-0.9845:2
0.7611,0.3434,-0.1058,-0.3982,-1.1259,-0.7016,-0.2323,0.2068,0.5882,0.8178,1.1863,0.5562,-0.1267,-0.7390,-0.6699,-1.2356,-0.8208,-0.4251,0.2988,0.6421,1.0864,0.9875,0.6544,0.0305,-0.9976,-0.6229,-1.1608,-1.1402,-0.2228,0.7034,1.0182,0.8367:2
-0.8623,-0.6518,0.1456,0.6935,1.2387,1.0523,0.6291,-0.0361,-1.0191,-1.2723,-0.6450,-0.4885,-0.0378,0.7830,0.6012,0.8969,0.8132,0.3158,-0.1987,-0.6633,-1.1317,-0.6905,-0.6955,0.2875,0.2927,0.8595,0.9179,0.4462,0.1395,-0.5453,-0.5152,-1.0335:2
0.8910,1.0195,0.3371,-0.4023,-0.7621,-0.9643,-0.5077,0.5104,0.9727,0.9114,0.1065,-0.2225,-1.0471,-1.1081,-0.3148,0.5372,1.0041,0.9212,0.5565,-0.3647,-0.7655,-0.8820,-0.3077,0.5472,1.0626,0.8486,0.3829,-0.6611,-0.8159,-1.0816,-0.4678,0.2498:3
0.7278,0.2732,-0.5020,-0.7274,-0.8082,-0.2461,0.8720,0.9229,0.5726,0.1372,-0.7889,-0.9020,-0.8901,-0.3836,0.6184,0.8912,1.0098,0.3223,-0.7176,-0.9046,-0.9194,0.0222,0.7206,1.0669,0.8918,-0.0540,-0.6703,-1.2906,-1.0766,-0.0711,0.8197,1.1650:3
-1.0278,-0.5395,0.1702,0.9855,1.1197,0.6743,-0.5594,-0.9431,-0.6586,-0.0784,0.4645,1.0828,0.9117,0.6328,-0.4400,-1.3487,-1.1958,-0.4639,0.1772,0.7345,1.2001,0.6717,-0.2963,-0.7476,-1.2547,-0.7248,0.8118,0.7990,1.1785,0.5750,-0.0954,-0.7802:3
-0.8311,-0.3214,0.7359,1.0350,0.9355,-0.1306,-0.7995,-1.0511,-0.6744,-0.2418,0.3870,1.1070,0.9990,0.2952,-0.3782,-0.8786,-0.6920,0.0810,0.8924,1.0508,1.1442,0.2636,-0.4983,-0.6551,-0.6028,-0.1896,0.5318,1.1064,0.9812,0.3043,-0.5103,-1.2423:3
0.8509,1.1425,0.9594,-0.1790,-0.6137,-1.0972,-0.5905,-0.0384,0.6666,1.0479,0.7174,0.0057,-0.2903,-0.8582,-0.7859,-0.0482,0.3161,0.8244,0.6713,0.1103,-0.5249,-1.1568,-0.7886,-0.2103,0.4509,1.1073,1.0505,0.4641,-0.4607,-0.5980,-0.6320,-0.1861:3
-0.7061,-1.1999,-0.5444,0.3830,1.2034,0.7306,-0.1618,-0.6574,-0.8619,0.0286,0.5627,0.7020,0.2240,-0.7009,-0.7245,-0.7247,0.4047,0.9347,0.4672,-0.5070,-0.7520,-0.7086,0.2669,0.8746,1.0807,0.1121,-0.7745,-1.0843,-0.2803,0.7552,1.3453,0.0045:4
0.8766,0.8803,0.5307,-0.4633,-0.9242,-0.3505,0.5311,0.7441,0.4797,-0.2524,-1.2327,-0.7870,0.2303,0.7611,0.8650,0.0975,-0.6358,-1.0488,-0.4699,0.7504,1.0595,0.2695,-0.1835,-1.0176,-0.3447,0.3077,0.9807,0.5662,-0.2906,-0.9267,-1.0109,0.3116:4
1.0796,1.0783,-0.0251,-0.3818,-1.1783,-0.1975,0.3497,0.9848,0.4135,-0.4151,-1.0187,-0.3503,0.3316,0.6418,1.1713,-0.5960,-0.8362,-0.8886,0.1427,0.3865,1.1153,0.2233,-0.3985,-0.9459,-0.7974,0.8199,1.0511,0.4111,0.0290,-1.1847,-0.8833,-0.0129:4
-0.9572,0.1313,0.8772,0.9870,0.1474,-0.4413,-0.8721,-0.4494,0.6926,1.1426,0.2472,-0.3765,-0.6239,-0.6054,0.2258,1.1588,0.5626,0.0575,-1.2534,-0.9146,-0.1540,0.8688,0.5491,0.3470,-0.3565,-0.8047,-0.5630,0.6506,0.9519,0.9588,-0.6459,-1.0536:4
0.5414,-0.2362,-0.7735,-1.2006,-0.1389,0.8529,0.5523,0.4213,-0.4446,-0.7801,-0.6355,0.6533,1.1674,0.7845,0.0059,-1.0317,-0.8131,0.1257,0.6737,1.0818,0.3615,-0.5203,-0.8010,-0.5609,0.6160,1.0370,0.5667,-0.4345,-0.8892,-0.4165,-0.0524,1.1115:4

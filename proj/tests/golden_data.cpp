// Frozen output of the fixed 10-slot scenario in support::small_scenario(),
// produced once and checked in. Any change to the RNG streams, channel model,
// reward shaping, or CSV formatting shows up as a byte-level diff here.

const char* kGoldenCsv =
    "t,v_avg,r_sum,r_uav_0,r_uav_1\n"
    "0,0,0,0,0\n"
    "1,0,0,0,0\n"
    "2,0,0,0,0\n"
    "3,0,0,0,0\n"
    "4,0,0,0,0\n"
    "5,108944.025,217888.049,217888.049,0\n"
    "6,250229.074,282570.098,160410.423,122159.675\n"
    "7,414236.599,328015.051,156543.982,171471.068\n"
    "8,473653.392,118833.586,0,118833.586\n"
    "9,473653.392,0,0,0\n";

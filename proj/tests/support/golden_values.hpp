// Generated by tests/support/gen_goldens.py -- do not edit by hand.
#pragma once

namespace golden {

inline constexpr double k0_at_1 = 0.42102443824070833;

inline constexpr double k0_grid_x[] = {
    1.0000000000000000e-8,
    9.9999999999999995e-7,
    0.00010000000000000000,
    0.010000000000000000,
    0.10000000000000001,
    0.50000000000000000,
    1.0000000000000000,
    1.8999999999999999,
    2.0000000000000000,
    2.1000000000000001,
    3.0000000000000000,
    5.0000000000000000,
    8.0000000000000000,
    12.000000000000000,
    20.000000000000000,
    35.000000000000000,
    60.000000000000000,
    120.00000000000000,
    300.00000000000000,
    700.00000000000000,
};
inline constexpr double k0_grid_val[] = {
    18.536612259610778,
    13.931442073626419,
    9.3262719134502749,
    4.7212447301610949,
    2.4270690247020166,
    0.92441907122766586,
    0.42102443824070833,
    0.12884597927604749,
    0.11389387274953344,
    0.10078374088996693,
    0.034739504386279248,
    0.0036910983340425943,
    0.00014647070522281539,
    2.2008253973114914e-6,
    5.7412378153365243e-10,
    1.3310351491429469e-16,
    1.4138978405591078e-27,
    8.7635680998255777e-54,
    3.7236948548891433e-132,
    4.6697764316853769e-306,
};

struct Hyp2f1Case { double a, b, c, x, value; };
inline constexpr Hyp2f1Case hyp2f1_cases[] = {
    {2.0000000000000000, 0.50000000000000000, 2.5000000000000000, -1.0000000000000000, 0.75000000000000000},
    {2.0000000000000000, 0.50000000000000000, 2.5000000000000000, -0.90000000000000002, 0.76665581207601926},
    {2.0000000000000000, 0.50000000000000000, 2.5000000000000000, -0.25000000000000000, 0.91358575949637248},
    {2.0000000000000000, 0.50000000000000000, 2.5000000000000000, 0.50000000000000000, 1.3045135806310373},
    {2.0000000000000000, 0.50000000000000000, 2.5000000000000000, 0.70999999999999996, 1.5807119612052946},
    {2.0000000000000000, 0.50000000000000000, 2.5000000000000000, 0.90000000000000002, 2.2016172130720900},
    {2.0000000000000000, 0.50000000000000000, 2.5000000000000000, 0.98999999999999999, 3.7776676350084001},
    {2.0000000000000000, 0.50000000000000000, 2.5000000000000000, 0.99999899999999997, 10.651363965656807},
    {1.0000000000000000, 1.0000000000000000, 2.0000000000000000, 0.50000000000000000, 1.3862943611198906},
    {1.0000000000000000, 1.0000000000000000, 2.0000000000000000, 0.94999999999999996, 3.1534023932147266},
    {0.50000000000000000, 1.5000000000000000, 3.2500000000000000, 0.80000000000000004, 1.3137480705700264},
    {2.0000000000000000, 2.0000000000000000, 2.5000000000000000, 0.50000000000000000, 3.0000000000000000},
};

// f3(g) for g in {0.5, 1, 3}; G-form value at w = g^2/8 is sqrt(2)*f3(g).
inline constexpr double pdf3_at_half = 0.43745857248734842;
inline constexpr double pdf3_at_one = 0.34067752700335966;
inline constexpr double pdf3_at_three = 0.10524687198625544;
inline constexpr double meijer_g0330_at_eighth = 0.48179077908387754;

inline constexpr double m2_at_quarter = 0.70364148665744311;
inline constexpr double m2_at_one = 0.33333333333333333;
inline constexpr double m2_at_forty = 0.0021158476077134846;

inline constexpr double m3_at_em4 = 0.99980316986682145;
inline constexpr double m3_at_tenth = 0.83596935721629356;
inline constexpr double m3_at_one = 0.32739299663738908;
inline constexpr double m3_at_ten = 0.030120346423100960;
inline constexpr double meijer_g2332_at_half = 0.82065254228745153;

// E[log2(1+G)] for the double cascade, exact expectation integral.
inline constexpr double capacity_double_unit = 1.2202793400395753;
inline constexpr double capacity_triple_unit = 1.3259261643831005;
// Independent Monte-Carlo route (numpy PCG64 seed 12345, 1e7 samples).
inline constexpr double capacity_double_unit_mc = 1.2203511925804491;
inline constexpr double capacity_double_unit_mc_se = 0.0001977189043000106;

// integral of e^{-z}/(1+z) over (0,inf) = e * E1(1).
inline constexpr double exp_weighted_inv1p = 0.59634736232319407;

inline constexpr double digamma_at_one = -0.57721566490153286;
inline constexpr double digamma_at_half = -1.9635100260214235;
inline constexpr double digamma_at_p625 = 1.7504535268837360;

struct LogGammaCase { double re, im, lg_re, lg_im; };
inline constexpr LogGammaCase log_gamma_cases[] = {
    {0.75000000000000000, -40.000000000000000, -60.990699558352197, -107.94813766529655},
    {25.500000000000000, -12.250000000000000, 53.498098717362514, -39.890329755535678},
    {0.50000000000000000, 3.0000000000000000, -3.7934504504362232, 0.30981927108643917},
    {3.0000000000000000, 0.0, 0.69314718055994531, 0.0},
    {0.10000000000000001, -0.20000000000000001, 1.4196225566088015, 1.1894584561916535},
};

}  // namespace golden

//! Numerical constants.

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_402_43;

/// ln √(2π)
pub const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_741_780_329_736_405_617_6;

/// ln √π
pub const LN_SQRT_PI: f64 = 0.572_364_942_924_700_087_071_713_675_676_529_4;

/// ln 16
pub const LN_16: f64 = 2.772_588_722_239_781_237_668_928_485_832_706_3;

/// Bernoulli numbers B_2, B_4, …, B_20.
pub(crate) const BERNOULLI_EVEN: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

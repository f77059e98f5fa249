use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use solvdeg::verifier::compare::{cmp_power_with, Exponent, PrecisionConfig, Verdict};
use solvdeg::verifier::interval::LogInterval;
use solvdeg::verifier::{verify_psl2_sweep, VerifyConfig};

fn ratio(n: u64, d: u64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

proptest! {
    #[test]
    fn doubling_the_cap_keeps_decided_verdicts(
        xn in 1u64..1 << 40, xd in 1u64..1000, yn in 1u64..1 << 20, yd in 1u64..100,
        num in 1i64..20, den in 1i64..20, use_mu in any::<bool>(),
    ) {
        let exponent = if use_mu { Exponent::mu() } else { Exponent::rational(5, 2) };
        let (x, y) = (ratio(xn, xd), ratio(yn, yd));
        let low = cmp_power_with(&x, &y, num, den, &exponent, PrecisionConfig::with_cap(128));
        let high = cmp_power_with(&x, &y, num, den, &exponent, PrecisionConfig::with_cap(256));
        if low.verdict != Verdict::Undecidable {
            prop_assert_eq!(low.verdict, high.verdict);
        }
    }

    #[test]
    fn log_enclosures_contain_the_float_value(n in 1u64..u64::MAX, bits in 24u32..200) {
        let coarse = LogInterval::ln_u64(n, bits);
        let fine = LogInterval::ln_u64(n, 512).coarsen(bits);
        let x = (n as f64).ln();
        let slack = 4.0 * f64::EPSILON * x.max(1.0) + coarse.width();
        prop_assert!(coarse.lo_f64() - slack <= x && x <= coarse.hi_f64() + slack);
        prop_assert!(coarse.lo_f64() <= fine.hi_f64() && fine.lo_f64() <= coarse.hi_f64());
    }
}

#[test]
fn only_tight_projective_case_is_q_8() {
    let start = Instant::now();
    let report = verify_psl2_sweep(&VerifyConfig::default().with_q_max(1 << 20)).unwrap();
    assert!(report.failures.is_empty());
    let tight: Vec<_> = report.verdicts.iter().filter(|e| e.verdict == Verdict::Equal).map(|e| e.q).collect();
    assert_eq!(tight, vec![Some(8)]);
    eprintln!("sweep to 2^20 took {:.1}s", start.elapsed().as_secs_f64());
}

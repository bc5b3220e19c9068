//! Reference values computed independently at 40+ digits from the defining
//! sums, checked against the double-precision evaluators.

#![allow(clippy::excessive_precision)]

use num_complex::Complex64;
use zetaw::reflection::{chi, laurent_residue, residue_chi_at_0_closed, residue_inv_chi_at_2};
use zetaw::zeta_w::zeta_w;
use zetaw::TruncationIndex;

fn idx(n: u64) -> TruncationIndex {
    TruncationIndex::new(n).unwrap()
}

fn close(got: Complex64, want: Complex64, rel: f64) {
    assert!(
        (got - want).norm() <= rel * want.norm(),
        "got {got}, want {want}"
    );
}

#[test]
fn zeta_w_reference_points() {
    let cases = [
        (
            3,
            (0.5, 14.0),
            (-0.286_343_834_445_015_04, -0.079_453_225_926_203_648),
        ),
        (
            50,
            (-1.5, 2.0),
            (70.889_911_373_825_468, 91.685_631_768_856_474),
        ),
        (
            1000,
            (2.0, -30.0),
            (0.825_879_323_208_772_08, 0.269_033_838_076_316_65),
        ),
        (7, (-3.25, 0.0), (-198.796_050_195_471_68, 0.0)),
    ];
    for (n, (sr, si), (vr, vi)) in cases {
        close(
            zeta_w(idx(n), Complex64::new(sr, si)).value,
            Complex64::new(vr, vi),
            1e-12,
        );
    }
}

#[test]
fn chi_reference_points() {
    close(
        chi(idx(2), Complex64::new(0.3, 5.0)).value,
        Complex64::new(1.320_852_539_352_880_1, -0.249_657_234_937_782_30),
        1e-12,
    );
    close(
        chi(idx(20), Complex64::new(1.7, -2.0)).value,
        Complex64::new(-1.758_610_879_580_400_5, 2.953_617_880_528_272_3),
        1e-12,
    );
}

#[test]
fn residue_reference_values() {
    let cases = [
        (1, -5.034_538_889_741_472_2, -6.471_748_623_905_224_6),
        (2, -3.633_681_042_334_312_4, -3.594_797_132_565_379_3),
        (10, -1.344_106_977_500_159_7, -0.709_309_835_268_341_87),
        (176, -1.513_450_583_648_563_4e-4, -0.037_752_810_320_430_912),
        (177, 1.044_899_860_810_956_1e-3, -0.037_537_838_532_115_809),
        (1000, 0.267_804_953_126_118_46, -0.006_594_884_903_289_275_7),
    ];
    for (n, res0, res2) in cases {
        let closed = residue_chi_at_0_closed(idx(n)).unwrap();
        assert!(
            (closed - res0).abs() <= 1e-11 * res0.abs().max(1e-2),
            "N={n}: {closed}"
        );
        assert!((laurent_residue(idx(n)) - res0).abs() <= 1e-6, "N={n}");
        let inv = residue_inv_chi_at_2(idx(n)).unwrap();
        assert!((inv - res2).abs() <= 1e-12 * res2.abs(), "N={n}: {inv}");
    }
}

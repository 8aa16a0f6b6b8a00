mod common;

use realspherical::cli::catalog;
use realspherical::exactalg::{Rational, Vector};
use realspherical::grasslimit::{default_schedule, sample_points, Degenerator, Thresholds};

#[test]
fn verdict_is_scale_equivariant() {
    let times = default_schedule(50);
    for name in catalog::list() {
        let a = common::analyze_fixture(name, true);
        let (z, ss, c) = (&a.space, &a.splitting, &a.compression);
        let deg = Degenerator::new(z, ss, &c.h_lim);
        let (inner, outer) = sample_points(c, 3, 11);
        for p in inner.iter().chain(&outer) {
            let x = ss.a_z.combine(p);
            let base = deg.degenerate(&x, &times, Thresholds::default()).unwrap();
            assert!(base.orthonormality_residual < 1e-10, "{name}");
            for k in [common::int(3), Rational::new(1.into(), 7.into())] {
                let scaled: Vector = x.iter().map(|v| v * &k).collect();
                let t = deg
                    .degenerate(&scaled, &times, Thresholds::default())
                    .unwrap();
                assert_eq!(t.verdict, base.verdict, "{name}");
                for (d0, d1) in base.distances.iter().zip(&t.distances) {
                    assert!((d0 - d1).abs() < 1e-9, "{name}");
                }
            }
        }
    }
}

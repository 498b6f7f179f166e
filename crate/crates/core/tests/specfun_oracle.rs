//! Legendre functions against a frozen arbitrary-precision table.

#[path = "oracle/pq_table.rs"]
mod pq_table;

use su11::specfun::{legendre_p, legendre_q, ComplexDegree};
use su11::{c64, C64};

fn err(got: C64, want: C64) -> f64 {
    (got - want).norm() / want.norm().max(1e-300)
}

#[test]
fn legendre_p_table() {
    let mut worst = (0.0, String::new());
    for &(re, im, x, p, _) in pq_table::TABLE {
        let nu = ComplexDegree::new(c64(re, im));
        let got = legendre_p(nu, x).unwrap();
        let e = err(got, c64(p[0], p[1]));
        // relative to max(|P|, 1e-6): P decays in |Im ν| and oscillates through zero
        let scaled = (got - c64(p[0], p[1])).norm() / c64(p[0], p[1]).norm().max(1e-6);
        if scaled > worst.0 {
            worst = (scaled, format!("ν = {re}+{im}i, x = {x}: rel {e:.2e}"));
        }
    }
    println!("worst P: {:.3e} ({})", worst.0, worst.1);
    assert!(worst.0 < 1e-10, "{}", worst.1);
}

#[test]
fn legendre_q_table() {
    let mut worst = (0.0, String::new());
    for &(re, im, x, _, q) in pq_table::TABLE {
        let nu = ComplexDegree::new(c64(re, im));
        let got = legendre_q(nu, x).unwrap();
        let e = err(got, c64(q[0], q[1]));
        if e > worst.0 {
            worst = (e, format!("ν = {re}+{im}i, x = {x}"));
        }
    }
    println!("worst Q: {:.3e} ({})", worst.0, worst.1);
    assert!(worst.0 < 1e-10, "{}", worst.1);
}

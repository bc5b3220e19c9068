//! Central finite differences with Richardson extrapolation.

/// Five-point central derivative on the stencil `x ± h`, `x ± 2h`.
///
/// This is the Richardson combination `(4 D(h) − D(2h)) / 3` of two
/// three-point differences; truncation error is `O(h⁴)`.
pub fn central5<F: Fn(f64) -> f64>(f: &F, x: f64, h: f64) -> f64 {
    let d1 = f(x + h) - f(x - h);
    let d2 = f(x + 2.0 * h) - f(x - 2.0 * h);
    (8.0 * d1 - d2) / (12.0 * h)
}

/// Derivative estimate together with an error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Derivative {
    pub value: f64,
    pub error: f64,
}

/// One further Richardson step on top of [`central5`]: combines the
/// five-point values at `h` and `h/2` to cancel the `h⁴` term.
pub fn richardson_derivative<F: Fn(f64) -> f64>(f: &F, x: f64, h: f64) -> Derivative {
    let coarse = central5(f, x, h);
    let fine = central5(f, x, 0.5 * h);
    let value = (16.0 * fine - coarse) / 15.0;
    Derivative {
        value,
        error: (fine - coarse).abs() / 15.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_point_rule_is_exact_on_quartics() {
        let f = |x: f64| 3.0 * x.powi(4) - x.powi(3) + 2.0 * x - 7.0;
        let df = |x: f64| 12.0 * x.powi(3) - 3.0 * x * x + 2.0;
        // quartic term leaves no O(h^4) residue because f^(5) = 0
        assert!((central5(&f, 0.3, 1e-2) - df(0.3)).abs() < 1e-10);
    }

    #[test]
    fn richardson_on_exp() {
        let d = richardson_derivative(&f64::exp, 1.0, 1e-2);
        assert!((d.value - std::f64::consts::E).abs() < 1e-11);
        assert!(d.error < 1e-8);
    }
}

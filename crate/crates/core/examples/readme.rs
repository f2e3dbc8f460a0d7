use hyperperiod::{elliptic::real_period_lambda, special::{pfq, EvalOptions}, HypergeometricSpec64, Rational};

fn main() -> hyperperiod::Result<()> {
    let half = Rational::new(1, 2);
    let spec = HypergeometricSpec64::new(vec![half; 3], vec![Rational::from_integer(1); 2], 0.25)?;
    let f = pfq(&spec, &EvalOptions::default())?.value;
    let omega = real_period_lambda(1.0 / 3.0, 1e-15)?.omega;
    assert!((f - (4.0f64 / 3.0).sqrt() * omega * omega / std::f64::consts::PI.powi(2)).abs() < 1e-10);
    println!("{f} {omega}");
    Ok(())
}

//! Population m-th Gini index: closed forms where they exist, adaptive
//! quadrature everywhere else.
//!
//! Run with: cargo run --example population_index

use mgini::{
    gini_gamma_closed, ig_exponential_closed, ig_gamma_quadrature, ig_generic, Distribution,
    GiniOrder, QuadratureConfig,
};

fn main() -> mgini::Result<()> {
    let config = QuadratureConfig::default();

    println!("Exponential populations (any rate): closed form vs quadrature");
    println!(
        "{:>3} {:>14} {:>14} {:>10}",
        "m", "closed", "quadrature", "|diff|"
    );
    let exp = Distribution::exponential(1.0)?;
    for m in 2..=6 {
        let m = GiniOrder::new(m)?;
        let closed = ig_exponential_closed(m)?;
        let quad = ig_generic(exp, m, &config)?;
        println!(
            "{:>3} {:>14.10} {:>14.10} {:>10.2e}",
            m,
            closed,
            quad,
            (closed - quad).abs()
        );
    }

    println!();
    println!("Gamma populations, classical Gini (m = 2): Γ(α+½)/(√π α Γ(α))");
    println!(
        "{:>6} {:>14} {:>14} {:>10}",
        "alpha", "closed", "quadrature", "|diff|"
    );
    for alpha in [0.5, 1.0, 2.0, 5.0] {
        let closed = gini_gamma_closed(alpha)?;
        let quad = ig_gamma_quadrature(alpha, GiniOrder::new(2)?, &config)?;
        println!(
            "{:>6} {:>14.10} {:>14.10} {:>10.2e}",
            alpha,
            closed,
            quad,
            (closed - quad).abs()
        );
    }

    println!();
    println!("Higher orders for Gamma(2, 1), two independent integration routes");
    println!("{:>3} {:>14} {:>14}", "m", "regularized", "generic");
    let gamma = Distribution::gamma(2.0, 1.0)?;
    for m in 2..=5 {
        let m = GiniOrder::new(m)?;
        let direct = ig_gamma_quadrature(2.0, m, &config)?;
        let generic = ig_generic(gamma, m, &config)?;
        println!("{:>3} {:>14.10} {:>14.10}", m, direct, generic);
    }

    println!();
    println!("Rate invariance: IG_3 of Gamma(2, λ) across rates");
    for rate in [0.25, 1.0, 4.0] {
        let dist = Distribution::gamma(2.0, rate)?;
        let v = ig_generic(dist, GiniOrder::new(3)?, &config)?;
        println!("  λ = {rate:<5} -> {v:.10}");
    }

    Ok(())
}

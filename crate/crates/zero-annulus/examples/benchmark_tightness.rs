//! Small reproducible sweep: sample random polynomials, compute every bound,
//! and report how close each method gets to the true extreme root moduli.
//! Tightness is a ratio in (0, 1]; larger is tighter.

use zero_annulus::bounds::{
    annulus_width_metrics, cauchy_radius, diaz_barrero_annulus, t_fib_annulus,
};
use zero_annulus::families::{rng_for, sample_polynomial, Family};
use zero_annulus::oracle::find_roots;
use zero_annulus::tuner::tune_annulus;
use zero_annulus::TuneConfig;

const SEED: u64 = 17;
const COUNT: u64 = 20;

fn main() {
    let mut sums = [0.0f64; 4]; // cauchy, db, tfib(2), tuned — outer tightness
    let mut inner_sums = [0.0f64; 3]; // db, tfib(2), tuned

    for index in 0..COUNT {
        let mut rng = rng_for(SEED, index);
        let poly = sample_polynomial(Family::Uniform, 8, &mut rng);
        let roots = find_roots(&poly, 1e-12, 500).unwrap();
        assert!(roots.converged);
        let max_mod = roots.roots.iter().map(|z| z.norm()).fold(0.0f64, f64::max);

        let cauchy = cauchy_radius(&poly).unwrap().radius;
        sums[0] += max_mod / cauchy;

        let db = diaz_barrero_annulus(&poly).unwrap().annulus;
        let m = annulus_width_metrics(&db, &roots).unwrap();
        sums[1] += m.outer_ratio;
        inner_sums[0] += m.inner_ratio;

        let tf = t_fib_annulus(&poly, 2.0).unwrap().annulus;
        let m = annulus_width_metrics(&tf, &roots).unwrap();
        sums[2] += m.outer_ratio;
        inner_sums[1] += m.inner_ratio;

        let config = TuneConfig {
            budget: 600,
            ..TuneConfig::default()
        };
        let (_, _, tuned) = tune_annulus(&poly, &config).unwrap();
        let m = annulus_width_metrics(&tuned, &roots).unwrap();
        sums[3] += m.outer_ratio;
        inner_sums[2] += m.inner_ratio;
    }

    let n = COUNT as f64;
    println!("mean outer tightness over {COUNT} degree-8 polynomials:");
    println!("  cauchy   {:.4}", sums[0] / n);
    println!("  db       {:.4}", sums[1] / n);
    println!("  tfib(2)  {:.4}", sums[2] / n);
    println!("  tuned    {:.4}", sums[3] / n);
    println!("mean inner tightness:");
    println!("  db       {:.4}", inner_sums[0] / n);
    println!("  tfib(2)  {:.4}", inner_sums[1] / n);
    println!("  tuned    {:.4}", inner_sums[2] / n);
}

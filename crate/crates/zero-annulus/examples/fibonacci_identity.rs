//! The bound derivation leans on one combinatorial fact: a binomial sum over
//! the first n generalized Fibonacci numbers that telescopes to F_{4n}.
//! This example checks it in exact rational arithmetic, where "equal" means
//! the difference is the literal zero of Q, not a small float.

use num_rational::BigRational;
use zero_annulus::genfib::{fib_recurrence_exact, identity_sides_exact};
use zero_annulus::ExactFibParams;

fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn main() {
    // The classical Fibonacci case first.
    let classical = ExactFibParams::from_integers(1, 1, 1).unwrap();
    for n in 1..=6 {
        let (lhs, rhs) = identity_sides_exact(&classical, n);
        println!("a=b=c=1  n={n}: sum = {lhs}, F_{} = {rhs}", 4 * n);
        assert_eq!(lhs, rhs);
    }

    // A fractional triple. Every intermediate stays an exact rational.
    let params =
        ExactFibParams::new(rational(1, 2), rational(1, 1), rational(3, 8)).unwrap();
    for n in 1..=4 {
        let (lhs, rhs) = identity_sides_exact(&params, n);
        assert_eq!(lhs, rhs);
        assert_eq!(rhs, fib_recurrence_exact(&params, 4 * n));
        println!("a=1/2 b=1 c=3/8  n={n}: both sides = {lhs}");
    }
}

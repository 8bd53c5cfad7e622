//! Factorial Schur functions: column and row cases, generating series and
//! the vanishing characterization.

use capelli_core::scalar::{frac, int, render};
use capelli_core::symfun::{
    a_lambda, check_characterization, check_generating_series, e_factorial, h_factorial, schur_factorial, Partition,
    ShiftSequence,
};
use capelli_core::{Error, Ring, Scalar, SymPoly};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{expect, expect_sym, Run};
use crate::params::UsageError;

const SEQ_LEN: usize = 16;
const RANDOM_SEQUENCES: usize = 5;

fn random_rational(rng: &mut ChaCha8Rng) -> Scalar {
    frac(rng.gen_range(-30..=30), rng.gen_range(1..=6))
}

/// Multiplicity-free random sequences from the seed, then the shifted
/// squares `(ε + k - 1)^2` used by the orthogonal and symplectic algebras.
fn sequences(seed: u64) -> Vec<(String, ShiftSequence)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for s in 0..RANDOM_SEQUENCES {
        let mut values: Vec<Scalar> = Vec::new();
        while values.len() < SEQ_LEN {
            let x = random_rational(&mut rng);
            if !values.contains(&x) {
                values.push(x);
            }
        }
        out.push((format!("random{s}"), ShiftSequence::explicit(values)));
    }
    for (tag, eps) in [("squares-0", int(0)), ("squares-1/2", frac(1, 2)), ("squares-1", int(1))] {
        out.push((tag.to_string(), ShiftSequence::shifted_squares(eps)));
    }
    out
}

fn column(k: usize) -> Partition {
    Partition::new(vec![1; k]).expect("partition")
}

fn row(k: usize) -> Partition {
    Partition::new(vec![k]).expect("partition")
}

pub(super) fn elementary(run: &mut Run) -> Result<(), UsageError> {
    let ns = run.p.n_range(1..=3, 1..=4)?;
    let ks = run.p.k_range(1..=4, 1..=6)?;
    run.param("n", &ns);
    run.param("k", &ks);
    run.param("sequences", sequences(run.p.seed).iter().map(|(t, _)| t.clone()).collect::<Vec<_>>());
    for (tag, a) in sequences(run.p.seed) {
        for &n in &ns {
            for &k in &ks {
                let id = format!("{tag}/n={n}/k={k}");
                run.check(format!("{id}/e-is-column-schur"), || {
                    let e = e_factorial(k, n, &a);
                    if k > n {
                        return expect_sym("e_k vanishes for k > n", &e, &SymPoly::zero(), n);
                    }
                    expect_sym("e_k = s_(1^k)", &e, &schur_factorial(&column(k), n, &a)?, n)
                });
                run.check(format!("{id}/h-is-row-schur"), || {
                    expect_sym("h_k = s_(k)", &h_factorial(k, n, &a), &schur_factorial(&row(k), n, &a)?, n)
                });
            }
        }
    }
    Ok(())
}

pub(super) fn generating(run: &mut Run) -> Result<(), UsageError> {
    let ns = run.p.n_range(1..=3, 1..=4)?;
    let order = run.p.big_k(4, 1..=6)?;
    run.param("n", &ns);
    run.param("K", order);
    let mut rng = ChaCha8Rng::seed_from_u64(run.p.seed.wrapping_add(1));
    for (tag, a) in sequences(run.p.seed) {
        for &n in &ns {
            // sample points off the poles of the series
            let mut tries = 0;
            loop {
                let z: Vec<Scalar> = (0..n).map(|_| random_rational(&mut rng)).collect();
                match check_generating_series(order, &a, &z) {
                    Err(Error::PoleCollision(_)) if tries < 20 => tries += 1,
                    out => {
                        let shown: Vec<String> = z.iter().map(render).collect();
                        run.check(format!("{tag}/n={n}/z=({})", shown.join(",")), || out);
                        break;
                    }
                }
            }
        }
    }
    Ok(())
}

pub(super) fn characterization(run: &mut Run) -> Result<(), UsageError> {
    let ns = run.p.n_range(1..=3, 1..=4)?;
    let size = run.p.big_k(4, 0..=5)?;
    run.param("n", &ns);
    run.param("max_size", size);
    let seqs: Vec<(String, ShiftSequence)> =
        sequences(run.p.seed).into_iter().filter(|(t, _)| t == "random0" || t == "squares-1/2").collect();
    for (tag, a) in &seqs {
        for &n in &ns {
            let parts = Partition::all(0, size, n, size);
            for mu in &parts {
                let id = format!("{tag}/n={n}/mu={mu}");
                run.check(format!("{id}/vanishing-grid"), || {
                    let s = schur_factorial(mu, n, a)?;
                    for lambda in &parts {
                        let v = s.eval(&a_lambda(lambda, n, a)?)?;
                        if !lambda.contains(mu) && !v.is_zero() {
                            return Err(Error::mismatch("s_mu(a_lambda) = 0 off mu", format!("lambda={lambda}")));
                        }
                        if lambda == mu && v.is_zero() {
                            return Err(Error::mismatch("s_mu(a_mu) != 0", format!("lambda={lambda}")));
                        }
                    }
                    Ok(())
                });
                run.check(format!("{id}/characterizations-hold"), || {
                    let s = schur_factorial(mu, n, a)?;
                    for f in [s.clone(), s.scaled(&frac(-7, 3))] {
                        let c = check_characterization(&f, mu, n, a)?;
                        let all = c.proportional && c.vanishes_off_mu && c.vanishes_below_with_top;
                        expect("all three characterizations hold", all, || format!("{c:?}"))?;
                    }
                    Ok(())
                });
                run.check(format!("{id}/characterizations-reject-others"), || {
                    for nu in parts.iter().filter(|nu| *nu != mu && nu.size() <= mu.size()) {
                        let c = check_characterization(&schur_factorial(nu, n, a)?, mu, n, a)?;
                        let none = !c.proportional && !c.vanishes_off_mu && !c.vanishes_below_with_top;
                        expect("no characterization holds for s_nu", none, || format!("nu={nu}: {c:?}"))?;
                    }
                    Ok(())
                });
            }
        }
    }
    Ok(())
}

//! The `keller` report: basis types, the randomized checks and a table of
//! `π` on sampled subspaces.

use std::collections::BTreeSet;

use orthokit_hahn::checks::{run_all, Sampler, SUBSPACE_DIM};
use orthokit_hahn::{type_of, KVector, TypeClass};

use crate::error::{CliError, Result};
use crate::report::Report;

/// Number of sampled subspaces in the `π` table.
pub const PI_SAMPLES: usize = 6;

fn type_set(s: &BTreeSet<TypeClass>) -> String {
    let v: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("[{}]", v.join(" "))
}

pub fn keller_report(dim: usize, seed: u64, trials: usize) -> Result<Report> {
    if dim == 0 {
        return Err(CliError::Usage("--dim must be at least 1".into()));
    }
    let mut r = Report::default();
    r.fact("dim", dim.to_string());
    r.fact("seed", seed.to_string());
    r.fact("trials", trials.to_string());
    for i in 0..dim {
        r.fact(&format!("type e{i}"), type_of(&KVector::basis(dim, i))?.to_string());
    }
    let mut sampler = Sampler::new(seed.wrapping_add(1));
    let n = dim.clamp(2, SUBSPACE_DIM);
    for j in 0..PI_SAMPLES {
        let (x, _) = sampler.subspace(n);
        let perp = x.ortho_complement();
        r.fact(
            &format!("pi sample {j}"),
            format!("n {n} dim {} pi {} perp {}", x.dim(), type_set(&x.pi()), type_set(&perp.pi())),
        );
    }
    for o in run_all(dim, seed, trials) {
        let witness = o.first_failure.iter().cloned().collect();
        r.push(o.name, o.passed(), witness);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_report_passes_and_repeats() {
        let a = keller_report(3, 4, 10).unwrap();
        assert!(a.all_pass());
        assert_eq!(a.render(), keller_report(3, 4, 10).unwrap().render());
        assert!(a.render().contains("type e2: {2}\n"));
        assert_eq!(a.entries.len(), 14);
    }
}

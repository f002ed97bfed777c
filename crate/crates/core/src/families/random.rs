//! Seeded random members of the families, for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{generate_f1, generate_f2, generate_f3, F1Params, F3Added, FamilyWitness};
use crate::graph::Graph;

/// Splits a budget of `total` vertices into cycle lengths of at least 3.
fn cycle_lengths<R: Rng>(rng: &mut R, mut total: usize) -> Vec<usize> {
    let mut out = Vec::new();
    while total >= 3 {
        let len = rng.gen_range(3..=total);
        if total - len > 0 && total - len < 3 {
            continue;
        }
        out.push(len);
        total -= len;
        if total >= 3 && rng.gen_bool(0.5) {
            break;
        }
    }
    out
}

pub fn f1_params<R: Rng>(rng: &mut R, max_n: usize) -> F1Params {
    assert!(max_n >= 4);
    loop {
        let k = rng.gen_range(1..max_n);
        let budget = max_n - 1 - k;
        let lengths = if budget >= 3 && rng.gen_bool(0.6) {
            {
            let total = rng.gen_range(3..=budget);
            cycle_lengths(rng, total)
        }
        } else {
            Vec::new()
        };
        let links = lengths.iter().map(|&l| rng.gen_range(1..=l)).collect();
        let chords: Vec<usize> = (1..k.saturating_sub(1)).filter(|_| rng.gen_bool(0.3)).collect();
        let p = F1Params {
            k,
            cycle_lengths: lengths,
            links,
            chords,
        };
        if generate_f1(&p).is_ok() {
            return p;
        }
    }
}

pub fn f1<R: Rng>(rng: &mut R, max_n: usize) -> (Graph, FamilyWitness) {
    let (g, w) = generate_f1(&f1_params(rng, max_n)).expect("valid parameters");
    (g, FamilyWitness::F1(w))
}

pub fn f2<R: Rng>(rng: &mut R, max_n: usize) -> (Graph, FamilyWitness) {
    assert!(max_n >= 4);
    loop {
        let total = rng.gen_range(3..max_n);
        let lengths = cycle_lengths(rng, total);
        let links: Vec<usize> = lengths.iter().map(|&l| rng.gen_range(1..=l)).collect();
        if let Ok((g, w)) = generate_f2(&lengths, &links) {
            return (g, FamilyWitness::F2(w));
        }
    }
}

pub fn f3<R: Rng>(rng: &mut R, max_n: usize) -> (Graph, FamilyWitness) {
    assert!(max_n >= 5);
    loop {
        let p = f1_params(rng, max_n);
        let n = 1 + p.k + p.cycle_lengths.iter().sum::<usize>();
        let v = rng.gen_range(2..n);
        let u = rng.gen_range(2..n);
        let added = match rng.gen_range(0..4) {
            0 => F3Added::Single(v),
            1 => F3Added::ViaWk(v),
            2 => F3Added::ViaXy,
            _ => F3Added::ViaX(v),
        };
        let added = if rng.gen_bool(0.1) { F3Added::Explicit(u, v) } else { added };
        if let Ok((g, w)) = generate_f3(&p, &added) {
            return (g, FamilyWitness::F3(w));
        }
    }
}

/// A uniformly random relabeling of `g`.
pub fn shuffle<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{extremal_orientation_for, recognize_theorem_class};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_members_are_recognized() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            for (g, w) in [f1(&mut rng, 12), f2(&mut rng, 12), f3(&mut rng, 12)] {
                assert!(g.is_connected() && g.in_class_c());
                assert!(g.m() <= 2 * g.n() - 2);
                assert!(extremal_orientation_for(&g, &w).is_ok());
                assert!(recognize_theorem_class(&shuffle(&mut rng, &g)).is_some(), "{w:?}");
            }
        }
    }
}

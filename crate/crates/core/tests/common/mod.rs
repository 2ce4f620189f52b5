//! Corpus generators and matching helpers shared by the integration suites.
#![allow(dead_code)] // each test target uses its own subset

use std::collections::BTreeSet;

use ringlat::RingSpec;

/// Exponent profiles (nonincreasing) with `prod (a_i + 1) <= max_n`.
pub fn alpha_profiles(max_n: u64) -> Vec<Vec<u32>> {
    fn go(max_alpha: u32, budget: u64, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        for a in 1..=max_alpha {
            let need = (a + 1) as u64;
            if need <= budget {
                prefix.push(a);
                go(a, budget / need, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if max_n >= 2 {
        go((max_n - 1) as u32, max_n, &mut Vec::new(), &mut out);
    }
    out.sort();
    out.dedup();
    out
}

/// Every canonical spec built by assigning `primes` to the factors of each
/// profile, subject to `prod (a_i + 1) <= max_n`.
pub fn specs_with_ideal_bound(primes: &[u64], max_n: u64) -> Vec<RingSpec> {
    let mut specs = BTreeSet::new();
    for profile in alpha_profiles(max_n) {
        assign_primes(&profile, primes, &mut specs);
    }
    specs.into_iter().collect()
}

/// The acceptance corpus: profiles dominated by `(3, 2, 1)` over the given
/// primes.
pub fn specs_profile_321(primes: &[u64]) -> Vec<RingSpec> {
    let caps = [3u32, 2, 1];
    let mut profiles = Vec::new();
    for len in 1..=3usize {
        let mut profile = vec![0u32; len];
        fn walk(
            pos: usize,
            caps: &[u32],
            profile: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            if pos == profile.len() {
                out.push(profile.clone());
                return;
            }
            let hi = caps[pos].min(if pos == 0 { u32::MAX } else { profile[pos - 1] });
            for a in 1..=hi {
                profile[pos] = a;
                walk(pos + 1, caps, profile, out);
            }
        }
        walk(0, &caps, &mut profile, &mut profiles);
    }
    let mut specs = BTreeSet::new();
    for profile in profiles {
        assign_primes(&profile, primes, &mut specs);
    }
    specs.into_iter().collect()
}

fn assign_primes(profile: &[u32], primes: &[u64], out: &mut BTreeSet<RingSpec>) {
    fn go(
        profile: &[u32],
        primes: &[u64],
        pos: usize,
        chosen: &mut Vec<(u64, u32)>,
        out: &mut BTreeSet<RingSpec>,
    ) {
        if pos == profile.len() {
            // skip assignments whose factor modulus would overflow (5^35 and
            // friends); they are far beyond every supported size bound
            if let Ok(spec) = RingSpec::new(chosen.clone()) {
                out.insert(spec);
            }
            return;
        }
        for &p in primes {
            chosen.push((p, profile[pos]));
            go(profile, primes, pos + 1, chosen, out);
            chosen.pop();
        }
    }
    go(profile, primes, 0, &mut Vec::new(), out);
}

/// All specs over multisets of `(p, a)` with `p` in `primes`, `a <= max_alpha`
/// and ring order at most `max_order`.
pub fn specs_with_order_bound(primes: &[u64], max_alpha: u32, max_order: u128) -> Vec<RingSpec> {
    fn go(
        primes: &[u64],
        max_alpha: u32,
        budget: u128,
        min_factor: (u64, u32),
        chosen: &mut Vec<(u64, u32)>,
        out: &mut BTreeSet<RingSpec>,
    ) {
        if !chosen.is_empty() {
            out.insert(RingSpec::new(chosen.clone()).expect("valid factors"));
        }
        for &p in primes {
            for a in 1..=max_alpha {
                if (p, a) < min_factor {
                    continue;
                }
                let size = (p as u128).pow(a);
                if size <= budget {
                    chosen.push((p, a));
                    go(primes, max_alpha, budget / size, (p, a), chosen, out);
                    chosen.pop();
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    go(primes, max_alpha, max_order, (0, 0), &mut Vec::new(), &mut out);
    out.into_iter().collect()
}

/// Decide whether one fixed coordinate permutation maps code `a` onto code
/// `b` as word sets. Words are matched within equal-weight classes; for each
/// matching the column multisets must coincide.
pub fn permutation_equal(a: &[Vec<bool>], b: &[Vec<bool>]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let len = a.first().map(|w| w.len()).unwrap_or(0);
    if a.iter().chain(b).any(|w| w.len() != len) {
        return false;
    }
    let weight = |w: &Vec<bool>| w.iter().filter(|x| **x).count();
    let mut classes: Vec<(usize, Vec<usize>, Vec<usize>)> = Vec::new();
    for w in 0..=len {
        let ia: Vec<usize> = (0..a.len()).filter(|&i| weight(&a[i]) == w).collect();
        let ib: Vec<usize> = (0..b.len()).filter(|&i| weight(&b[i]) == w).collect();
        if ia.len() != ib.len() {
            return false;
        }
        if !ia.is_empty() {
            classes.push((w, ia, ib));
        }
    }
    // enumerate row matchings class by class
    fn search(
        classes: &[(usize, Vec<usize>, Vec<usize>)],
        pos: usize,
        rho: &mut Vec<(usize, usize)>,
        a: &[Vec<bool>],
        b: &[Vec<bool>],
        len: usize,
    ) -> bool {
        if pos == classes.len() {
            let mut a_cols: Vec<Vec<bool>> = (0..len)
                .map(|j| rho.iter().map(|&(ra, _)| a[ra][j]).collect())
                .collect();
            let mut b_cols: Vec<Vec<bool>> = (0..len)
                .map(|j| rho.iter().map(|&(_, rb)| b[rb][j]).collect())
                .collect();
            a_cols.sort();
            b_cols.sort();
            return a_cols == b_cols;
        }
        let (_, ia, ib) = &classes[pos];
        let mut perm: Vec<usize> = (0..ib.len()).collect();
        loop {
            rho.extend(ia.iter().zip(&perm).map(|(&ra, &k)| (ra, ib[k])));
            if search(classes, pos + 1, rho, a, b, len) {
                return true;
            }
            rho.truncate(rho.len() - ia.len());
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }
    search(&classes, 0, &mut Vec::new(), a, b, len)
}

fn next_permutation(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Position of the canonical ideal whose member set equals `members`
/// (residue tuples).
pub fn ideal_position_of_set(spec: &RingSpec, members: &[&[u64]]) -> usize {
    let want: BTreeSet<Vec<u64>> = members.iter().map(|m| m.to_vec()).collect();
    spec.ideals()
        .iter()
        .position(|ideal| {
            let got: BTreeSet<Vec<u64>> = ideal
                .materialize()
                .expect("within element bound")
                .members()
                .iter()
                .map(|e| e.residues().to_vec())
                .collect();
            got == want
        })
        .unwrap_or_else(|| panic!("no ideal of {spec} has members {members:?}"))
}

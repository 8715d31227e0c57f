//! Enumerations and exhaustive checks shared by the integration tests.
#![allow(dead_code)]

use std::cmp::Ordering;

use critbase_core::words::{
    build_block, classify, derived, is_admissible, materialize, successor, AdmissibleSeq, BinaryEpw, BinaryWord, HSpec,
    DEFAULT_MAX_DEPTH,
};

/// Every `h` with `len <= max_len` and entries in `1..=max_entry`.
pub fn h_lists(max_entry: u64, max_len: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        let next: Vec<Vec<u64>> = layer
            .iter()
            .flat_map(|h: &Vec<u64>| {
                (1..=max_entry).map(move |e| {
                    let mut g = h.clone();
                    g.push(e);
                    g
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Both closed-form tails for every `h` of the enumeration.
pub fn hspecs(max_entry: u64, max_len: usize) -> Vec<HSpec> {
    h_lists(max_entry, max_len)
        .into_iter()
        .flat_map(|h| [HSpec::periodic(h.clone()).unwrap(), HSpec::ones_tail(h).unwrap()])
        .collect()
}

/// Admissible sequences of the enumeration, `0^inf` included.
pub fn admissible_sequences(max_entry: u64, max_len: usize) -> Vec<AdmissibleSeq> {
    let mut out = vec![AdmissibleSeq::Zero];
    for h in h_lists(max_entry, max_len) {
        out.push(AdmissibleSeq::finite(h.clone()).unwrap());
        if !h.is_empty() {
            out.push(AdmissibleSeq::ones_tail(h).unwrap());
        }
    }
    out.sort_by_key(|d| d.word().unwrap());
    out.dedup();
    out
}

fn bit_strings(len: usize) -> impl Iterator<Item = Vec<u8>> {
    (0u32..1 << len).map(move |x| (0..len).map(|i| ((x >> (len - 1 - i)) & 1) as u8).collect())
}

/// All normalized binary words with the given length bounds, deduplicated.
pub fn binary_words(max_pre: usize, max_per: usize) -> Vec<BinaryEpw> {
    let mut out = Vec::new();
    for pre_len in 0..=max_pre {
        for per_len in 1..=max_per {
            for pre in bit_strings(pre_len) {
                for per in bit_strings(per_len) {
                    out.push(BinaryEpw::new(pre.clone(), per).unwrap());
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn with_tail(block: &BinaryWord, tail: u8) -> BinaryEpw {
    BinaryEpw::new(block.0.clone(), vec![tail]).unwrap()
}

fn is_suffix(a: &BinaryWord, b: &BinaryWord) -> bool {
    b.0.ends_with(&a.0)
}

/// Block identities and suffix bounds of the recursive blocks.
pub fn block_properties(max_entry: u64, max_len: usize) -> Result<usize, String> {
    let mut checked = 0;
    for h in h_lists(max_entry, max_len) {
        for j in 0..=h.len() {
            let one = build_block(&h, j, 1).map_err(|e| e.to_string())?;
            let zero = build_block(&h, j, 0).map_err(|e| e.to_string())?;
            let mut product = BinaryWord(vec![1]);
            let mut lower = BinaryWord(vec![]);
            for i in 0..j {
                lower = lower.concat(&build_block(&h, i, 0).unwrap());
                product = product.concat(&build_block(&h, i + 1, 0).unwrap());
            }
            if product != one {
                return Err(format!("h={h:?} j={j}: S(j,1) != 1 S(1,0)...S(j,0)"));
            }
            if j >= 1 && !is_suffix(&lower, &one) {
                return Err(format!("h={h:?} j={j}: S(0,0)...S(j-1,0) is not a suffix of S(j,1)"));
            }
            if j >= 1 && h[j - 1] >= 2 && !is_suffix(&lower, &zero) {
                return Err(format!("h={h:?} j={j}: S(0,0)...S(j-1,0) is not a suffix of S(j,0)"));
            }
            if with_tail(&zero, 1).compare(&with_tail(&one, 0)) != Ordering::Less {
                return Err(format!("h={h:?} j={j}: S(j,0) x < S(j,1) y fails"));
            }
            for (block, name) in [(&one, "S(j,1)"), (&zero, "S(j,0)")] {
                for start in 1..block.len() {
                    let suffix = &block.0[start..];
                    if suffix > &block.0[..suffix.len()] {
                        return Err(format!("h={h:?} j={j}: suffix {suffix:?} of {name} exceeds its prefix"));
                    }
                }
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// `classify(materialize(h)) = h` and admissibility of every closed form.
pub fn round_trip(max_entry: u64, max_len: usize) -> Result<usize, String> {
    let specs = hspecs(max_entry, max_len);
    for spec in &specs {
        let w = materialize(spec).map_err(|e| e.to_string())?;
        if !is_admissible(&w) {
            return Err(format!("{spec} materializes to the non-admissible {w}"));
        }
        let back = classify(&w, DEFAULT_MAX_DEPTH).map_err(|e| e.to_string())?;
        let expected = match spec.tail {
            critbase_core::words::Tail::PurePeriodic => AdmissibleSeq::Finite(spec.clone()),
            _ => AdmissibleSeq::ones_tail(spec.h.clone()).unwrap(),
        };
        if back != expected {
            return Err(format!("{spec} -> {w} -> {back}"));
        }
    }
    Ok(specs.len())
}

/// Inequalities satisfied by the derived sequence, and its fixed points.
pub fn derived_properties(max_entry: u64, max_len: usize) -> Result<usize, String> {
    let seqs = admissible_sequences(max_entry, max_len);
    let mut checked = 0;
    for d in seqs.iter().filter(|d| !d.is_all_ones()) {
        let w = d.word().unwrap();
        let dp = derived(d).map_err(|e| e.to_string())?;
        let shifted = w.shift(1);
        let span = dp.preperiod().len() + dp.period().len();
        for n in 1..=span {
            if *dp.digit(n - 1) != 0 {
                continue;
            }
            if dp.shift(n).compare(&dp) == Ordering::Less {
                return Err(format!("{d}: shift {n} of d' = {dp} drops below d'"));
            }
        }
        if d.is_finite_type() && dp.compare(&shifted) != Ordering::Greater {
            return Err(format!("{d}: d' = {dp} does not exceed the shift {shifted}"));
        }
        let fixed = dp == w;
        let expected_fixed = match d {
            AdmissibleSeq::Zero => true,
            AdmissibleSeq::Finite(s) => s.h.len() == 1,
            _ => false,
        };
        if fixed != expected_fixed {
            return Err(format!("{d}: d' = d is {fixed}, expected {expected_fixed}"));
        }
        checked += 1;
    }
    Ok(checked)
}

/// No binary word with short preperiod and period stays strictly between the
/// bounds of the two forbidden windows at all of its shifts.
pub fn forbidden_windows(max_entry: u64, max_len: usize, max_pre: usize, max_per: usize) -> Result<usize, String> {
    let candidates = binary_words(max_pre, max_per);
    let tails: Vec<Vec<BinaryEpw>> = candidates
        .iter()
        .map(|c| (1..=c.preperiod().len() + c.period().len()).map(|n| c.shift(n)).collect())
        .collect();
    let inside = |lo: &BinaryEpw, hi: &BinaryEpw, ts: &[BinaryEpw]| {
        ts.iter().all(|t| t.compare(lo) == Ordering::Greater && t.compare(hi) == Ordering::Less)
    };
    let seqs = admissible_sequences(max_entry, max_len);
    for d in &seqs {
        let w = d.word().unwrap();
        let lo = w.shift(1).prepend(&[0]);
        for (c, ts) in candidates.iter().zip(&tails) {
            if inside(&lo, &w, ts) {
                return Err(format!("{c} lies strictly between 0d_2d_3... and d = {w}"));
            }
        }
        if d.is_all_ones() {
            continue;
        }
        let dp = derived(d).unwrap();
        let (lo, hi) = (dp.prepend(&[0]), dp.prepend(&[1]));
        for (c, ts) in candidates.iter().zip(&tails) {
            if inside(&lo, &hi, ts) {
                return Err(format!("{c} lies strictly between 0d' and 1d' for d = {w}"));
            }
        }
    }
    Ok(seqs.len() * candidates.len())
}

/// No admissible word with bounded lengths lies strictly between a
/// finite-type `d` and its successor.
pub fn successor_minimality(max_pre: usize, max_per: usize) -> Result<usize, String> {
    let admissible: Vec<BinaryEpw> = binary_words(max_pre, max_per).into_iter().filter(is_admissible).collect();
    let mut checked = 0;
    for w in admissible.iter().filter(|w| w.is_purely_periodic() && w.period().len() <= max_per) {
        let d = classify(w, DEFAULT_MAX_DEPTH).unwrap();
        if !d.is_finite_type() || d.is_all_ones() {
            continue;
        }
        let next = successor(&d).unwrap().word().unwrap();
        if next.compare(w) != Ordering::Greater {
            return Err(format!("successor {next} of {w} is not larger"));
        }
        if derived(&successor(&d).unwrap()).unwrap() != derived(&d).unwrap() {
            return Err(format!("successor of {w} changes the derived sequence"));
        }
        if let Some(between) =
            admissible.iter().find(|v| v.compare(w) == Ordering::Greater && v.compare(&next) == Ordering::Less)
        {
            return Err(format!("{between} lies between {w} and its successor {next}"));
        }
        checked += 1;
    }
    Ok(checked)
}

pub mod ternary {
    use critbase_core::expand::{enumerate_expansions, eval_pi_closed, is_unique, Alphabet, DigitWord};
    use critbase_core::numeric::rational::{int, rat};
    use critbase_core::numeric::Rational;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// The image of a binary word under `1 -> m`, `0 -> 1`.
    pub fn delta_word(bits: &critbase_core::words::BinaryEpw, m: &Rational) -> DigitWord {
        bits.map(|b| if *b == 1 { m.clone() } else { int(1) })
    }

    /// Values of `m` drawn by the random generators.
    pub const M_CHOICES: [(i64, i64); 6] = [(2, 1), (5, 2), (3, 1), (7, 2), (4, 1), (5, 1)];

    pub fn random_m(rng: &mut StdRng) -> Rational {
        let (n, d) = M_CHOICES[rng.gen_range(0..M_CHOICES.len())];
        rat(n, d)
    }

    pub fn random_word(rng: &mut StdRng, m: &Rational, max_pre: usize, max_per: usize) -> DigitWord {
        let digits = [int(0), int(1), m.clone()];
        let pre_len = rng.gen_range(0..=max_pre);
        let per_len = rng.gen_range(1..=max_per);
        let pre = (0..pre_len).map(|_| digits[rng.gen_range(0..3)].clone()).collect();
        let per = (0..per_len).map(|_| digits[rng.gen_range(0..3)].clone()).collect();
        DigitWord::new(pre, per).unwrap()
    }

    /// A rational base in `[3/2, Q_A]` on a grid of step `(Q_A - 3/2)/64`.
    pub fn random_base(rng: &mut StdRng, alphabet: &Alphabet) -> Rational {
        let lo = rat(3, 2);
        let k = rng.gen_range(0..=64);
        &lo + (alphabet.q_max() - &lo) * rat(k, 64)
    }

    /// Compares the uniqueness test with depth-20 brute-force enumeration on
    /// `cases` random instances; returns the number of unique instances.
    pub fn oracle_agreement(cases: usize, seed: u64) -> Result<usize, String> {
        let mut rng = StdRng::seed_from_u64(seed);
        let depth = 20;
        let mut unique_count = 0;
        for _ in 0..cases {
            let m = random_m(&mut rng);
            let alphabet = Alphabet::ternary(&m).unwrap();
            let c = random_word(&mut rng, &m, 4, 6);
            let q = random_base(&mut rng, &alphabet);
            let x: Rational = eval_pi_closed(&c, &q).unwrap();
            let report = is_unique(&c, &q, &alphabet).map_err(|e| e.to_string())?;
            let found = enumerate_expansions(&x, &q, &alphabet, depth, 4);
            let brute = !found.overflow && found.prefixes.len() == 1 && found.prefixes[0] == c.prefix(depth);
            if !found.overflow && !found.prefixes.contains(&c.prefix(depth)) {
                return Err(format!("enumeration misses c = {c} itself at q = {q}"));
            }
            if report.unique != brute {
                return Err(format!(
                    "c = {c}, q = {q}, m = {m}: uniqueness test says {}, enumeration found {} prefixes",
                    report.unique,
                    found.prefixes.len()
                ));
            }
            unique_count += usize::from(brute);
        }
        Ok(unique_count)
    }
}

pub mod suites {
    use std::cmp::Ordering;
    use std::collections::HashMap;

    use critbase_core::critical::{big_p, component_interval, p_m, ComponentInterval, Settings, Status};
    use critbase_core::expand::{critical_base_of_sequence, is_unique, Alphabet};
    use critbase_core::numeric::rational::{int, parse_rational, rat};
    use critbase_core::numeric::{Field, QuadExt, Rational, Real};
    use critbase_core::words::{derived, AdmissibleSeq};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    use super::ternary::delta_word;

    /// Checks the three defining identities of `P_m` as exact equalities at
    /// `count` random rationals in `(1, 100]`.
    pub fn big_p_identities(count: usize, seed: u64) -> Result<usize, String> {
        let mut rng = StdRng::seed_from_u64(seed);
        for _ in 0..count {
            let den = rng.gen_range(1..=40i64);
            let m = int(1) + rat(rng.gen_range(1..=99 * den), den);
            let p = big_p(&m).map_err(|e| e.to_string())?;
            let one = p.one_like();
            let lift = |x: &Rational| p.lift(x);
            let p1 = p.minus(&one);
            let square = p1.times(&p1);
            if square != lift(&(&m / (&m - int(1)))) {
                return Err(format!("(P-1)^2 != m/(m-1) at m = {m}"));
            }
            let inner = lift(&m).divide(&p1).unwrap().minus(&one);
            let lhs = lift(&m).divide(&p).unwrap().plus(&inner.divide(&p).unwrap());
            if lhs != lift(&(&m - int(1))) {
                return Err(format!("m/P + (m/(P-1) - 1)/P != m - 1 at m = {m}"));
            }
            let left = lift(&(&m - int(1))).times(&p).minus(&lift(&m));
            if left != inner {
                return Err(format!("(m-1)P - m != m/(P-1) - 1 at m = {m}"));
            }
        }
        Ok(count)
    }

    /// `0^inf` and every finite-type sequence with `sum h <= max_sum`, in
    /// increasing lexicographic order.
    pub fn finite_type_sequences(max_sum: u64) -> Vec<AdmissibleSeq> {
        fn compositions(total: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if !prefix.is_empty() {
                out.push(prefix.clone());
            }
            for next in 1..=total {
                prefix.push(next);
                compositions(total - next, prefix, out);
                prefix.pop();
            }
        }
        let mut hs = Vec::new();
        compositions(max_sum, &mut Vec::new(), &mut hs);
        let mut seqs: Vec<AdmissibleSeq> = hs.into_iter().map(|h| AdmissibleSeq::finite(h).unwrap()).collect();
        seqs.push(AdmissibleSeq::Zero);
        seqs.sort_by(|a, b| a.word().unwrap().compare(&b.word().unwrap()));
        seqs
    }

    /// Component intervals of [`finite_type_sequences`], checked to satisfy
    /// `m_d < mu_d < M_d` and to be pairwise disjoint in lexicographic order.
    /// Returns the intervals and the number of adjacent pairs that touch.
    pub fn partition(max_sum: u64, tol: &Rational) -> Result<(Vec<ComponentInterval>, usize), String> {
        let seqs = finite_type_sequences(max_sum);
        let intervals: Vec<ComponentInterval> = seqs
            .iter()
            .map(|d| component_interval(d, tol).map_err(|e| format!("{d}: {e}")))
            .collect::<Result<_, _>>()?;
        for c in &intervals {
            if c.m_d.compare(&c.mu_d) != Some(Ordering::Less) || c.mu_d.compare(&c.big_m_d) != Some(Ordering::Less) {
                return Err(format!("{}: m_d < mu_d < M_d fails", c.d));
            }
        }
        let mut touching = 0;
        for pair in intervals.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            match a.big_m_d.compare(&b.m_d) {
                Some(Ordering::Less) => {}
                Some(Ordering::Equal) => touching += 1,
                Some(Ordering::Greater) => return Err(format!("I({}) and I({}) overlap", a.d, b.d)),
                None => {
                    let gap = (a.big_m_d.enclose(128).hull(&b.m_d.enclose(128))).width();
                    if gap > tol * int(4) {
                        return Err(format!("cannot order I({}) and I({})", a.d, b.d));
                    }
                    touching += 1;
                }
            }
        }
        // Non-adjacent pairs follow from adjacency once each interval is ordered.
        Ok((intervals, touching))
    }

    /// Outcome of sampling `m` on a grid.
    #[derive(Debug, Default)]
    pub struct GridReport {
        pub resolved: usize,
        pub in_cantor: usize,
        pub depth_limited: usize,
    }

    /// Every grid point must lie in the interval of its own sequence and in
    /// no other enumerated interval, or be depth-limited with a bracket
    /// narrower than `max_bracket`.
    pub fn grid_partition(
        lo: &Rational,
        hi: &Rational,
        step: &Rational,
        known: &[ComponentInterval],
        max_bracket: f64,
        settings: &Settings,
    ) -> Result<GridReport, String> {
        let mut cache: HashMap<AdmissibleSeq, ComponentInterval> =
            known.iter().map(|c| (c.d.clone(), c.clone())).collect();
        let mut report = GridReport::default();
        let mut m = lo.clone();
        while &m <= hi {
            let result = p_m(&m, settings).map_err(|e| format!("m = {m}: {e}"))?;
            match (&result.d, result.status) {
                (_, Status::DepthLimited) => {
                    let (a, b) = result.bracket.as_ref().ok_or(format!("m = {m}: missing bracket"))?;
                    let width = b.to_f64() - a.to_f64();
                    if !(width < max_bracket) {
                        return Err(format!("m = {m}: bracket width {width}"));
                    }
                    report.depth_limited += 1;
                }
                (AdmissibleSeq::InfiniteResolved(_), _) => report.in_cantor += 1,
                (d, _) => {
                    if !cache.contains_key(d) {
                        let c = component_interval(d, &settings.tol).map_err(|e| e.to_string())?;
                        cache.insert(d.clone(), c);
                    }
                    if cache[d].locate(&m) != Some(Ordering::Equal) {
                        return Err(format!("m = {m} is not in I({d})"));
                    }
                    let hits = known.iter().filter(|c| c.locate(&m) == Some(Ordering::Equal)).count();
                    let expected = usize::from(known.iter().any(|c| &c.d == d));
                    if hits != expected {
                        return Err(format!("m = {m} lies in {hits} enumerated intervals"));
                    }
                    report.resolved += 1;
                }
            }
            m += step;
        }
        Ok(report)
    }

    /// For each `m`, the critical base of `delta'` matches `p_m` within
    /// `max_gap`, and uniqueness of `delta'` flips across `p_m` at `offset`.
    pub fn critical_base_matches_p_m(ms: &[Rational], max_gap: f64, offset: &str) -> Result<Vec<(Rational, f64)>, String> {
        let settings = Settings::default();
        let offset = parse_rational(offset).unwrap();
        let mut out = Vec::new();
        for m in ms {
            let result = p_m(m, &settings).map_err(|e| e.to_string())?;
            if result.status != Status::Resolved {
                return Err(format!("m = {m}: search did not resolve"));
            }
            let alphabet = Alphabet::ternary(m).unwrap();
            let delta_prime = delta_word(&derived(&result.d).map_err(|e| e.to_string())?, m);
            let qc = critical_base_of_sequence(&delta_prime, &alphabet, &settings.tol).map_err(|e| e.to_string())?;
            let (a, b) = (qc.value.enclose(128), result.p.enclose(128));
            let gap = (a.hull(&b).width()).clone();
            let gap = critbase_core::numeric::rational::to_f64(&gap);
            if gap > max_gap {
                return Err(format!("m = {m}: q_c(delta') and p_m differ by up to {gap:e}"));
            }
            let above = b.hi() + &offset;
            let below = b.lo() - &offset;
            let unique_above = is_unique(&delta_prime, &above, &alphabet).map_err(|e| e.to_string())?.unique;
            let unique_below = is_unique(&delta_prime, &below, &alphabet).map_err(|e| e.to_string())?.unique;
            if !unique_above || unique_below {
                return Err(format!("m = {m}: uniqueness at p -/+ offset is {unique_below}/{unique_above}"));
            }
            out.push((m.clone(), gap));
        }
        Ok(out)
    }

    /// Whether `p` is exactly 2.
    pub fn is_exactly_two(p: &Real) -> bool {
        p.exact().is_some_and(|q| *q == QuadExt::rational(int(2)))
    }
}

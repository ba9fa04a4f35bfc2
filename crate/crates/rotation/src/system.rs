use std::cmp::Ordering;
use std::sync::Arc as StdArc;

use words_core::{complexity_profile, factor_set, Alphabet, FiniteWord, SymbolId};

use crate::circle::{
    intersect_segments, segments_to_arcs, shift_segments, sort_segments, Arc, CirclePoint, Segment,
};
use crate::error::RotationError;
use crate::quadratic::QuadraticReal;

/// A symbolic coding of the rotation by `alpha`: each symbol owns a union of
/// half-open arcs, the arcs of all symbols tile the circle exactly, and the
/// orbit of `start` is read off against that partition.
#[derive(Debug, Clone)]
pub struct CodingSystem {
    alphabet: StdArc<Alphabet>,
    alpha: QuadraticReal,
    start: CirclePoint,
    partition: Vec<Vec<Arc>>,
    /// Sorted non-wrapping cover of `[0, 1)` with symbol tags, for lookups.
    table: Vec<(Segment, SymbolId)>,
}

impl CodingSystem {
    pub fn new(
        alphabet: StdArc<Alphabet>,
        alpha: QuadraticReal,
        start: CirclePoint,
        partition: Vec<Vec<Arc>>,
    ) -> Result<Self, RotationError> {
        if alpha.is_rational() {
            return Err(RotationError::RationalAlpha);
        }
        assert_eq!(
            partition.len(),
            alphabet.len(),
            "one arc list per alphabet symbol"
        );
        let mut table: Vec<(Segment, SymbolId)> = Vec::new();
        for (i, arcs) in partition.iter().enumerate() {
            for arc in arcs {
                for seg in arc.segments() {
                    table.push((seg, SymbolId(i as u32)));
                }
            }
        }
        if table.is_empty() {
            return Err(RotationError::InvalidPartition("no arcs given".into()));
        }
        table.sort_by(|a, b| a.0.start.cmp_exact(&b.0.start));
        // seamless exact cover: starts at 0, chains end-to-start, ends at 1
        if table[0].0.start.signum() != Ordering::Equal {
            return Err(RotationError::InvalidPartition(format!(
                "gap before {}",
                table[0].0.start
            )));
        }
        for pair in table.windows(2) {
            match pair[0].0.end.cmp_exact(&pair[1].0.start) {
                Ordering::Equal => {}
                Ordering::Less => {
                    return Err(RotationError::InvalidPartition(format!(
                        "gap between {} and {}",
                        pair[0].0.end, pair[1].0.start
                    )))
                }
                Ordering::Greater => {
                    return Err(RotationError::InvalidPartition(format!(
                        "overlap at {}",
                        pair[1].0.start
                    )))
                }
            }
        }
        let last = &table[table.len() - 1].0.end;
        if last.cmp_exact(&QuadraticReal::one()) != Ordering::Equal {
            return Err(RotationError::InvalidPartition(format!(
                "cover stops at {last}"
            )));
        }
        Ok(CodingSystem {
            alphabet,
            alpha,
            start,
            partition,
            table,
        })
    }

    pub fn alphabet(&self) -> &StdArc<Alphabet> {
        &self.alphabet
    }

    pub fn alpha(&self) -> &QuadraticReal {
        &self.alpha
    }

    pub fn start_point(&self) -> &CirclePoint {
        &self.start
    }

    pub fn arcs_of(&self, s: SymbolId) -> &[Arc] {
        &self.partition[s.index()]
    }

    /// The symbol whose arc union contains `x`.
    pub fn symbol_at(&self, x: &CirclePoint) -> SymbolId {
        // rightmost segment with start <= x; the exact cover guarantees a hit
        let idx = self
            .table
            .partition_point(|(seg, _)| seg.start.cmp_exact(x.value()) != Ordering::Greater);
        let (seg, sym) = &self.table[idx - 1];
        debug_assert!(x.value().cmp_exact(&seg.end) == Ordering::Less);
        *sym
    }

    /// The coding of the first `n` orbit points of `start`.
    pub fn orbit_code(&self, n: usize) -> FiniteWord {
        let mut letters = Vec::with_capacity(n);
        let mut x = self.start.clone();
        for _ in 0..n {
            letters.push(self.symbol_at(&x));
            x = x.rotate(&self.alpha);
        }
        FiniteWord::new(self.alphabet.clone(), letters).expect("symbols come from the alphabet")
    }

    pub(crate) fn symbol_segments(&self, s: SymbolId) -> Vec<Segment> {
        let mut segs: Vec<Segment> = self.partition[s.index()]
            .iter()
            .flat_map(|a| a.segments())
            .collect();
        sort_segments(&mut segs);
        segs
    }
}

/// The two-arc system `a: [0, alpha)`, `b: [alpha, 1)` over `{a, b}`.
pub fn canonical_system(
    alpha: QuadraticReal,
    start: CirclePoint,
) -> Result<CodingSystem, RotationError> {
    if alpha.is_rational() {
        return Err(RotationError::RationalAlpha);
    }
    if alpha.signum() != Ordering::Greater
        || alpha.cmp_exact(&QuadraticReal::one()) != Ordering::Less
    {
        return Err(RotationError::AlphaOutOfRange(alpha.to_string()));
    }
    let alphabet = Alphabet::binary();
    let cut = CirclePoint::new(alpha.clone());
    let partition = vec![
        vec![Arc::new(CirclePoint::zero(), cut.clone())],
        vec![Arc::new(cut, CirclePoint::zero())],
    ];
    CodingSystem::new(alphabet, alpha, start, partition)
}

/// The length-`n` prefix of the rotation word for `alpha` started at `x0`,
/// over `{a, b}` with `a` on `[0, alpha)`.
pub fn sturmian_word(
    alpha: &QuadraticReal,
    x0: CirclePoint,
    n: usize,
) -> Result<FiniteWord, RotationError> {
    Ok(canonical_system(alpha.clone(), x0)?.orbit_code(n))
}

/// The exact set of starting points whose next `|w|` symbols spell `w`:
/// the intersection of the pulled-back symbol sets
/// `⋂ T^{-j}(U_{w_j})`, returned as disjoint arcs (possibly none).
pub fn factor_interval(sys: &CodingSystem, w: &FiniteWord) -> Result<Vec<Arc>, RotationError> {
    if w.alphabet() != sys.alphabet() {
        return Err(RotationError::UnknownSymbol(w.to_string()));
    }
    if w.is_empty() {
        return Err(RotationError::UnknownSymbol("empty word".into()));
    }
    let mut segs = sys.symbol_segments(w.letter(0));
    for j in 1..w.len() {
        let delta = -&sys.alpha().mul_int(j as i64);
        let pulled = shift_segments(&sys.symbol_segments(w.letter(j)), &delta);
        segs = intersect_segments(&segs, &pulled);
        if segs.is_empty() {
            return Ok(Vec::new());
        }
    }
    Ok(segments_to_arcs(&segs))
}

/// The system whose symbols are the `k+1` length-`k` factors of the base
/// rotation word, each owning its factor interval. Its orbit code is the
/// sliding-window sequence of `k`-factors of the base word.
pub fn grouped_system(alpha: &QuadraticReal, k: usize) -> Result<CodingSystem, RotationError> {
    if k == 0 {
        return Err(RotationError::GroupTooSmall);
    }
    let base = canonical_system(alpha.clone(), CirclePoint::zero())?;
    let mut prefix_len = 512.max(64 * (k + 1));
    let factors = loop {
        let word = base.orbit_code(prefix_len);
        let fs = factor_set(&word, k)?;
        if fs.factor_count(k) == k + 1 {
            break fs.factor_words(k);
        }
        prefix_len *= 2;
        if prefix_len > 1 << 22 {
            return Err(RotationError::FactorCountNotReached(k));
        }
    };
    let symbols: Vec<String> = factors.iter().map(|f| f.to_string()).collect();
    let alphabet = Alphabet::new(symbols)?;
    let mut partition = Vec::with_capacity(factors.len());
    for f in &factors {
        partition.push(factor_interval(&base, f)?);
    }
    CodingSystem::new(
        alphabet,
        alpha.clone(),
        base.start_point().clone(),
        partition,
    )
}

/// Observed complexity report: the least `n0` and `K` with `T(n) = n + K`
/// holding from `n0` through `n_max` on a generated prefix.
#[derive(Debug, Clone)]
pub struct MinimalGrowthReport {
    pub generated_len: usize,
    pub n_max: usize,
    pub profile: Vec<usize>,
    pub offset: Option<i64>,
    pub stable_from: Option<usize>,
    pub success: bool,
}

pub fn verify_minimal_growth(
    sys: &CodingSystem,
    n_words: usize,
    n_max: usize,
) -> Result<MinimalGrowthReport, RotationError> {
    let word = sys.orbit_code(n_words);
    let n_max = n_max.min(word.len());
    let fs = factor_set(&word, n_max)?;
    let profile = complexity_profile(&fs);
    if profile.is_empty() {
        return Ok(MinimalGrowthReport {
            generated_len: word.len(),
            n_max,
            profile,
            offset: None,
            stable_from: None,
            success: false,
        });
    }
    let offset = profile[n_max - 1] as i64 - n_max as i64;
    let mut stable_from = n_max;
    for n in (1..n_max).rev() {
        if profile[n - 1] as i64 - n as i64 == offset {
            stable_from = n;
        } else {
            break;
        }
    }
    // evidence requires a positive offset and more than a single tail point
    let success = offset >= 1 && stable_from < n_max;
    Ok(MinimalGrowthReport {
        generated_len: word.len(),
        n_max,
        profile,
        offset: Some(offset),
        stable_from: Some(stable_from),
        success,
    })
}

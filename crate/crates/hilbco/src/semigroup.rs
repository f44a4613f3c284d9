//! Affine semigroup rings k[[S]] for finitely generated S ⊆ ℕ^m.
//!
//! Membership is decided by dynamic programming over a box, and quotient
//! lengths are counted by enumerating S minus a translated copy of itself.
//! A count is certified by recounting over a doubled box; disagreement at
//! every retry is reported explicitly rather than returning a silently
//! wrong value.

use std::sync::{Arc, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Hard cap on membership-table cells (bits); boxes beyond this are refused.
const TABLE_CELL_CAP: u128 = 1 << 28;

/// Row-padded bitset over the box [0, bound]^m: one word-aligned row per
/// assignment of the first m−1 coordinates, the last coordinate packed as
/// bits. Rows starting at word boundaries make the dynamic program and
/// the counting passes plain shift/or/popcount loops.
struct MembershipTable {
    bound: u64,
    dims: usize,
    row_words: usize,
    bits: Vec<u64>,
}

/// dst |= src << shift, over `words` words of each slice.
fn or_shifted(dst: &mut [u64], src: &[u64], shift: usize, words: usize) {
    let word_shift = shift / 64;
    let bit_shift = shift % 64;
    if bit_shift == 0 {
        for w in (word_shift..words).rev() {
            dst[w] |= src[w - word_shift];
        }
    } else {
        for w in (word_shift..words).rev() {
            let mut v = src[w - word_shift] << bit_shift;
            if w > word_shift {
                v |= src[w - word_shift - 1] >> (64 - bit_shift);
            }
            dst[w] |= v;
        }
    }
}

/// row |= row << shift, in place. Iterating downwards reads only words
/// not yet written in this pass.
fn or_shifted_in_place(row: &mut [u64], shift: usize, words: usize) {
    let word_shift = shift / 64;
    let bit_shift = shift % 64;
    if bit_shift == 0 {
        for w in (word_shift..words).rev() {
            row[w] |= row[w - word_shift];
        }
    } else {
        for w in (word_shift..words).rev() {
            let mut v = row[w - word_shift] << bit_shift;
            if w > word_shift {
                v |= row[w - word_shift - 1] >> (64 - bit_shift);
            }
            row[w] |= v;
        }
    }
}

/// row |= row << shift, repeated with doubled shifts: closure under
/// adding `step` within one row.
fn smear(row: &mut [u64], step: usize, side: usize, words: usize) {
    let mut shift = step;
    while shift < side {
        or_shifted_in_place(row, shift, words);
        shift *= 2;
    }
}

impl MembershipTable {
    fn build(dims: usize, gens: &[Vec<u64>], bound: u64) -> Result<MembershipTable> {
        let side = bound as usize + 1;
        let row_words = side.div_ceil(64);
        let prefix_count = (side as u128)
            .checked_pow(dims.saturating_sub(1) as u32)
            .ok_or(Error::TableTooLarge { cells: u128::MAX })?;
        let cells = prefix_count
            .checked_mul(row_words as u128 * 64)
            .ok_or(Error::TableTooLarge { cells: u128::MAX })?;
        if cells > TABLE_CELL_CAP {
            return Err(Error::TableTooLarge { cells });
        }
        let prefix_count = prefix_count as usize;
        let mut bits = vec![0u64; prefix_count * row_words];

        // split the generators into those that stay inside one row and
        // those that step to an earlier row
        let mut in_row: Vec<usize> = Vec::new();
        // (prefix coordinates, flat prefix delta, last entry)
        let mut cross_row: Vec<(Vec<u64>, usize, usize)> = Vec::new();
        let mut prefix_strides = vec![0usize; dims.saturating_sub(1)];
        {
            let mut s = 1usize;
            for j in (0..dims.saturating_sub(1)).rev() {
                prefix_strides[j] = s;
                s *= side;
            }
        }
        for g in gens {
            let last = g[dims - 1] as usize;
            if g[..dims - 1].iter().all(|&e| e == 0) {
                in_row.push(last);
            } else {
                let delta: usize = g[..dims - 1]
                    .iter()
                    .zip(&prefix_strides)
                    .map(|(&e, &s)| e as usize * s)
                    .sum();
                cross_row.push((g[..dims - 1].to_vec(), delta, last));
            }
        }

        let tail_mask = if side.is_multiple_of(64) {
            u64::MAX
        } else {
            (1u64 << (side % 64)) - 1
        };

        let mut prefix = vec![0u64; dims.saturating_sub(1)];
        for p in 0..prefix_count {
            let mut row = vec![0u64; row_words];
            if prefix.iter().all(|&c| c == 0) {
                row[0] |= 1; // the origin
            }
            for (coords, delta, last) in &cross_row {
                // componentwise subtraction must not underflow
                if coords.iter().zip(&prefix).all(|(&g, &c)| g <= c) {
                    let src = &bits[(p - delta) * row_words..(p - delta + 1) * row_words];
                    or_shifted(&mut row, src, *last, row_words);
                }
            }
            // close under the generators living inside the row
            loop {
                let before: Vec<u64> = row.clone();
                for &step in &in_row {
                    smear(&mut row, step, side, row_words);
                }
                if row == before {
                    break;
                }
            }
            row[row_words - 1] &= tail_mask;
            bits[p * row_words..(p + 1) * row_words].copy_from_slice(&row);

            // advance the prefix odometer (row-major: last prefix coord fastest)
            for j in (0..prefix.len()).rev() {
                prefix[j] += 1;
                if prefix[j] <= bound {
                    break;
                }
                prefix[j] = 0;
            }
        }
        Ok(MembershipTable {
            bound,
            dims,
            row_words,
            bits,
        })
    }

    fn row(&self, prefix_flat: usize) -> &[u64] {
        &self.bits[prefix_flat * self.row_words..(prefix_flat + 1) * self.row_words]
    }

    /// Flat row index of a prefix in this table's stride.
    fn prefix_flat(&self, prefix: &[u64]) -> usize {
        let side = self.bound as usize + 1;
        let mut flat = 0usize;
        for &c in prefix {
            flat = flat * side + c as usize;
        }
        flat
    }

    fn contains(&self, v: &[u64]) -> bool {
        debug_assert_eq!(v.len(), self.dims);
        debug_assert!(v.iter().all(|&c| c <= self.bound));
        let flat = self.prefix_flat(&v[..self.dims - 1]);
        let y = v[self.dims - 1] as usize;
        self.row(flat)[y / 64] >> (y % 64) & 1 == 1
    }
}

/// A finitely generated subsemigroup of ℕ^m, given by its generators.
///
/// The membership table is cached behind a lock and shared by clones; the
/// cached box only ever grows, and a table for a larger bound restricts to
/// the table for any smaller one.
#[derive(Clone)]
pub struct AffineSemigroup {
    dims: usize,
    gens: Vec<Vec<u64>>,
    cache: Arc<RwLock<Option<Arc<MembershipTable>>>>,
}

impl PartialEq for AffineSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.dims == other.dims && self.gens == other.gens
    }
}
impl Eq for AffineSemigroup {}

impl std::fmt::Debug for AffineSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AffineSemigroup")
            .field("dims", &self.dims)
            .field("gens", &self.gens)
            .finish()
    }
}

impl AffineSemigroup {
    pub fn new(dims: usize, mut gens: Vec<Vec<u64>>) -> Result<AffineSemigroup> {
        if dims == 0 {
            return Err(Error::InvalidSemigroup(
                "ambient dimension must be positive".into(),
            ));
        }
        if gens.is_empty() {
            return Err(Error::InvalidSemigroup(
                "at least one generator required".into(),
            ));
        }
        for g in &gens {
            if g.len() != dims {
                return Err(Error::InvalidSemigroup(format!(
                    "generator {g:?} has length {} instead of {dims}",
                    g.len()
                )));
            }
            if g.iter().all(|&e| e == 0) {
                return Err(Error::InvalidSemigroup("generators must be nonzero".into()));
            }
        }
        gens.sort();
        gens.dedup();
        Ok(AffineSemigroup {
            dims,
            gens,
            cache: Arc::new(RwLock::new(None)),
        })
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.gens
    }

    pub fn max_generator_entry(&self) -> u64 {
        self.gens
            .iter()
            .flat_map(|g| g.iter().copied())
            .max()
            .unwrap_or(0)
    }

    fn table(&self, bound: u64) -> Result<Arc<MembershipTable>> {
        {
            let guard = self.cache.read().expect("cache lock");
            if let Some(t) = guard.as_ref() {
                if t.bound >= bound {
                    return Ok(Arc::clone(t));
                }
            }
        }
        let mut guard = self.cache.write().expect("cache lock");
        if let Some(t) = guard.as_ref() {
            if t.bound >= bound {
                return Ok(Arc::clone(t));
            }
        }
        let built = Arc::new(MembershipTable::build(self.dims, &self.gens, bound)?);
        *guard = Some(Arc::clone(&built));
        Ok(built)
    }

    /// Build (or reuse) the membership table covering `[0, bound]^m`.
    /// Sequence computations call this once with their largest bound so
    /// per-power counts all read one shared table.
    pub fn warm_membership(&self, bound: u64) -> Result<()> {
        self.table(bound).map(|_| ())
    }

    /// Decide whether `v` is a non-negative integer combination of the
    /// generators, working inside the box `[0, bound]^m`.
    pub fn contains(&self, v: &[u64], bound: u64) -> Result<bool> {
        if v.len() != self.dims {
            return Err(Error::AmbientMismatch(v.len(), self.dims));
        }
        if v.iter().any(|&c| c > bound) {
            return Err(Error::BoundExceeded(v.to_vec(), bound));
        }
        // every partial sum of generators stays inside [0, v], so the table
        // for the requested bound is conclusive
        let table = self.table(bound)?;
        Ok(table.contains(v))
    }

    /// Rank of the group generated by the generators (fraction-free
    /// Gaussian elimination over the integers).
    pub fn lattice_rank(&self) -> usize {
        let mut rows: Vec<Vec<i128>> = self
            .gens
            .iter()
            .map(|g| g.iter().map(|&e| e as i128).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.dims {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let p = rows[rank][col];
            for r in rank + 1..rows.len() {
                let f = rows[r][col];
                if f != 0 {
                    for c in 0..self.dims {
                        rows[r][c] = rows[r][c] * p - rows[rank][c] * f;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

/// An ideal of the semigroup ring, generated by elements of S. Generators
/// are kept as an antichain for the order a ≤ b iff b − a ∈ S.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemigroupIdeal {
    semigroup: AffineSemigroup,
    gens: Vec<Vec<u64>>,
}

/// A colength together with its certification status.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CertifiedCount {
    pub value: BigInt,
    pub certified: bool,
    /// Largest bound used while counting.
    pub bound: u64,
}

impl SemigroupIdeal {
    /// Verifies that every generator lies in S, then reduces the list to
    /// an antichain under S-divisibility.
    pub fn new(semigroup: &AffineSemigroup, gens: Vec<Vec<u64>>) -> Result<SemigroupIdeal> {
        for g in &gens {
            if g.len() != semigroup.dims() {
                return Err(Error::AmbientMismatch(g.len(), semigroup.dims()));
            }
            let bound = g.iter().copied().max().unwrap_or(0);
            if !semigroup.contains(g, bound)? {
                return Err(Error::NotInSemigroup(g.clone()));
            }
        }
        let gens = reduce_to_antichain(semigroup, gens)?;
        Ok(SemigroupIdeal {
            semigroup: semigroup.clone(),
            gens,
        })
    }

    pub fn semigroup(&self) -> &AffineSemigroup {
        &self.semigroup
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// True when the ideal contains the zero vector, i.e. is the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.iter().all(|&e| e == 0))
    }

    /// Product ideal: pairwise sums of generators, reduced to an antichain.
    pub fn product(&self, other: &SemigroupIdeal) -> Result<SemigroupIdeal> {
        if self.semigroup != other.semigroup {
            return Err(Error::SemigroupMismatch);
        }
        let mut cands = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                cands.push(a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<u64>>());
            }
        }
        Ok(SemigroupIdeal {
            semigroup: self.semigroup.clone(),
            gens: reduce_to_antichain(&self.semigroup, cands)?,
        })
    }

    pub fn pow(&self, n: u32) -> Result<SemigroupIdeal> {
        let mut result = SemigroupIdeal {
            semigroup: self.semigroup.clone(),
            gens: vec![vec![0; self.semigroup.dims()]],
        };
        for _ in 0..n {
            result = result.product(self)?;
        }
        Ok(result)
    }

    /// Sum (union) of two ideals.
    pub fn sum(&self, other: &SemigroupIdeal) -> Result<SemigroupIdeal> {
        if self.semigroup != other.semigroup {
            return Err(Error::SemigroupMismatch);
        }
        let mut cands = self.gens.clone();
        cands.extend(other.gens.iter().cloned());
        Ok(SemigroupIdeal {
            semigroup: self.semigroup.clone(),
            gens: reduce_to_antichain(&self.semigroup, cands)?,
        })
    }

    /// Containment via S-divisibility by some generator.
    pub fn contains(&self, v: &[u64], bound: u64) -> Result<bool> {
        for a in &self.gens {
            if a.iter().zip(v).all(|(&ge, &ve)| ge <= ve) {
                let diff: Vec<u64> = v.iter().zip(a).map(|(&ve, &ge)| ve - ge).collect();
                if self.semigroup.contains(&diff, bound)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Count the elements of S outside ∪_a (a + S) over the box
    /// `[0, bound]^m`, recount over the doubled box, and certify when the
    /// two counts agree. On disagreement the bound is doubled up to three
    /// times; the final count is returned with `certified` set accordingly.
    pub fn colength(&self, bound: u64) -> Result<CertifiedCount> {
        if self.is_zero() {
            return Err(Error::InfiniteLength);
        }
        if self.is_unit() {
            return Ok(CertifiedCount {
                value: BigInt::from(0),
                certified: true,
                bound,
            });
        }
        // a minimum box: one semigroup step beyond every ideal generator,
        // so degenerate windows cannot agree on a truncated count
        let floor = self.semigroup.max_generator_entry().max(1)
            + self
                .gens
                .iter()
                .flat_map(|g| g.iter().copied())
                .max()
                .unwrap_or(0)
            + 1;
        let mut bound = bound.max(floor);
        // build the doubled table up front; the count at the smaller bound
        // reads the same table
        match self.semigroup.table(bound * 2) {
            Ok(_) | Err(Error::TableTooLarge { .. }) => {}
            Err(e) => return Err(e),
        }
        let mut count = self.count_in_box(bound)?;
        for _ in 0..3u32 {
            let doubled = match self.count_in_box(bound * 2) {
                Ok(c) => c,
                // the doubled box is out of reach: report what we have,
                // flagged as uncertified
                Err(Error::TableTooLarge { .. }) => {
                    return Ok(CertifiedCount {
                        value: BigInt::from(count),
                        certified: false,
                        bound,
                    })
                }
                Err(e) => return Err(e),
            };
            if doubled == count {
                return Ok(CertifiedCount {
                    value: BigInt::from(count),
                    certified: true,
                    bound: bound * 2,
                });
            }
            bound *= 2;
            count = doubled;
        }
        Ok(CertifiedCount {
            value: BigInt::from(count),
            certified: false,
            bound,
        })
    }

    /// Count S \ ∪_a (a + S) inside [0, bound]^m. Per row of the box, the
    /// translated copies of S are accumulated by shifted ors and the
    /// complement is counted wordwise.
    fn count_in_box(&self, bound: u64) -> Result<u64> {
        let table = self.semigroup.table(bound)?;
        let dims = self.semigroup.dims();
        let side = bound as usize + 1;
        let words = side.div_ceil(64);
        let tail_mask = if side.is_multiple_of(64) {
            u64::MAX
        } else {
            (1u64 << (side % 64)) - 1
        };

        let mut total = 0u64;
        let mut prefix = vec![0u64; dims - 1];
        let mut src_prefix = vec![0u64; dims - 1];
        let mut covered = vec![0u64; words];
        loop {
            let row = table.row(table.prefix_flat(&prefix));
            covered.fill(0);
            for a in &self.gens {
                if a[..dims - 1].iter().zip(&prefix).all(|(&g, &c)| g <= c) {
                    for j in 0..dims - 1 {
                        src_prefix[j] = prefix[j] - a[j];
                    }
                    let src = table.row(table.prefix_flat(&src_prefix));
                    or_shifted(&mut covered, src, a[dims - 1] as usize, words);
                }
            }
            for w in 0..words {
                let mut free = row[w] & !covered[w];
                if w == words - 1 {
                    free &= tail_mask;
                }
                total += free.count_ones() as u64;
            }
            let mut j = prefix.len();
            loop {
                if j == 0 {
                    return Ok(total);
                }
                j -= 1;
                prefix[j] += 1;
                if prefix[j] <= bound {
                    break;
                }
                prefix[j] = 0;
            }
        }
    }
}

fn reduce_to_antichain(
    semigroup: &AffineSemigroup,
    mut cands: Vec<Vec<u64>>,
) -> Result<Vec<Vec<u64>>> {
    cands.sort_by_key(|v| (v.iter().sum::<u64>(), v.clone()));
    cands.dedup();
    let mut kept: Vec<Vec<u64>> = Vec::new();
    'outer: for c in cands {
        for k in &kept {
            if k.iter().zip(&c).all(|(&a, &b)| a <= b) {
                let diff: Vec<u64> = c.iter().zip(k).map(|(&b, &a)| b - a).collect();
                let bound = diff.iter().copied().max().unwrap_or(0);
                if semigroup.contains(&diff, bound)? {
                    continue 'outer;
                }
            }
        }
        kept.push(c);
    }
    kept.sort();
    Ok(kept)
}

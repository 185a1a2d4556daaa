use super::{Arrow, Path, Quiver, Vertex};
use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SplitEntry {
    Vertex(Vertex),
    Arrow(Arrow),
}

/// An `n`-thin split of a path: slot `i` holds an arrow where `bits[i]` is
/// set and the current intermediate vertex otherwise. Entries are indexed
/// source-first, so the path is `entries[n-1] ⋯ entries[0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThinSplit {
    pub bits: Vec<bool>,
    pub entries: Vec<SplitEntry>,
}

impl ThinSplit {
    /// The split of `p` selected by `bits`, which must contain exactly
    /// `p.len()` ones.
    pub fn of(q: &Quiver, p: &Path, bits: &[bool]) -> Result<ThinSplit> {
        let ones = bits.iter().filter(|&&b| b).count();
        if ones != p.len() {
            return Err(Error::Domain(format!(
                "bit sequence has {ones} ones but the path has length {}",
                p.len()
            )));
        }
        let mut at = p.source();
        let mut next = p.arrows().iter();
        let entries = bits
            .iter()
            .map(|&bit| {
                if bit {
                    let a = *next.next().expect("counted ones");
                    at = q.target(a);
                    SplitEntry::Arrow(a)
                } else {
                    SplitEntry::Vertex(at)
                }
            })
            .collect();
        Ok(ThinSplit {
            bits: bits.to_vec(),
            entries,
        })
    }

    /// Concatenates the entries (vertices as trivial paths), checking every
    /// junction.
    pub fn reassemble(&self, q: &Quiver) -> Result<Path> {
        let mut acc: Option<Path> = None;
        for e in &self.entries {
            let piece = match *e {
                SplitEntry::Vertex(v) => Path::trivial(v),
                SplitEntry::Arrow(a) => q.arrow_path(a),
            };
            acc = Some(match acc {
                None => piece,
                Some(prev) => q.concat(&piece, &prev)?,
            });
        }
        acc.ok_or_else(|| Error::Domain("empty thin split".into()))
    }
}

/// Bitwise complement.
pub fn complement(bits: &[bool]) -> Vec<bool> {
    bits.iter().map(|b| !b).collect()
}

/// All `n`-sequences with exactly `ones` ones, lexicographic with 0 < 1.
pub(crate) fn bit_sequences(n: usize, ones: usize) -> Vec<Vec<bool>> {
    fn go(n: usize, ones: usize, prefix: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let left = n - prefix.len();
        let placed = prefix.iter().filter(|&&b| b).count();
        let need = ones - placed;
        if need < left {
            prefix.push(false);
            go(n, ones, prefix, out);
            prefix.pop();
        }
        if need > 0 {
            prefix.push(true);
            go(n, ones, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if ones <= n {
        go(n, ones, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// All `n`-thin splits of `p`, in lexicographic order of their bit
/// sequences.
pub fn thin_splits(q: &Quiver, p: &Path, n: usize) -> Result<Vec<ThinSplit>> {
    if n < p.len() {
        return Err(Error::Domain(format!(
            "cannot split a path of length {} into {n} slots",
            p.len()
        )));
    }
    bit_sequences(n, p.len())
        .iter()
        .map(|bits| ThinSplit::of(q, p, bits))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Builtin;

    #[test]
    fn arrow_into_two_slots() {
        let q = Builtin::Kronecker(1).build().unwrap();
        let a = q.arrow_path(q.arrow("a1").unwrap());
        let (e, z) = (q.vertex("e").unwrap(), q.vertex("z").unwrap());
        let splits = thin_splits(&q, &a, 2).unwrap();
        assert_eq!(splits.len(), 2);
        assert_eq!(splits[0].bits, [false, true]);
        assert_eq!(
            splits[0].entries,
            [SplitEntry::Vertex(e), SplitEntry::Arrow(a.arrows()[0])]
        );
        assert_eq!(splits[1].bits, [true, false]);
        assert_eq!(
            splits[1].entries,
            [SplitEntry::Arrow(a.arrows()[0]), SplitEntry::Vertex(z)]
        );
        for s in &splits {
            assert_eq!(s.reassemble(&q).unwrap(), a);
        }
    }

    #[test]
    fn trivial_path_split() {
        let q = Builtin::LinearA(2).build().unwrap();
        let g = Path::trivial(Vertex(0));
        let splits = thin_splits(&q, &g, 3).unwrap();
        assert_eq!(splits.len(), 1);
        assert_eq!(splits[0].entries, vec![SplitEntry::Vertex(Vertex(0)); 3]);
    }

    #[test]
    fn counts_and_errors() {
        let q = Builtin::LinearA(3).build().unwrap();
        let p = q.parse_path("a2a1").unwrap();
        assert_eq!(thin_splits(&q, &p, 4).unwrap().len(), 6);
        assert!(thin_splits(&q, &p, 1).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&[true, false]), [false, true]);
        assert!(complement(&[]).is_empty());
        assert_eq!(
            complement(&[true, true, false, false]),
            [false, false, true, true]
        );
    }
}

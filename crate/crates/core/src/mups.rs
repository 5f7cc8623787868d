//! Minimal unique palindromic substrings (MUPSs).
//!
//! Every MUPS is centered on a run. A single-run MUPS `a^e` exists iff `e`
//! is the strictly largest exponent among `a`-runs. Any other MUPS has the
//! form `a^e P a^e` for a tree node `P`; for each symbol `a` only the two
//! largest `a`-labelled out-edges of `P` matter.

use std::collections::BTreeMap;

use crate::{Error, Interval, Result, RleEertree, RleString, Symbol};

/// Which form of the `a^1 P a^1` rule to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MupsRule {
    /// `a^1 P a^1` is only a MUPS when `P` itself occurs at least twice.
    #[default]
    Corrected,
    /// Skips the occurrence check on `P`. Wrong; kept so the verification
    /// campaign can prove it detects the difference.
    Literal,
}

/// One MUPS and the run holding its center.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mups {
    pub interval: Interval,
    pub center_run: usize,
}

/// `S[i..j]` for each MUPS, sorted by position, as parallel arrays.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MupsList {
    beg: Vec<u64>,
    end: Vec<u64>,
    len: Vec<u64>,
    center_run: Vec<usize>,
}

impl MupsList {
    pub fn extract<S: Symbol>(
        tree: &RleEertree<S>,
        rle: &RleString<S>,
        rule: MupsRule,
    ) -> Result<Self> {
        let mut found = single_run_mups(rle);
        found.extend(composite_mups(tree, rle, rule)?);
        assemble_sorted(found, rle)
    }

    pub fn len(&self) -> usize {
        self.beg.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beg.is_empty()
    }

    pub fn begins(&self) -> &[u64] {
        &self.beg
    }

    pub fn ends(&self) -> &[u64] {
        &self.end
    }

    pub fn lengths(&self) -> &[u64] {
        &self.len
    }

    pub fn center_runs(&self) -> &[usize] {
        &self.center_run
    }

    pub fn interval(&self, i: usize) -> Interval {
        Interval::new(self.beg[i], self.end[i])
    }

    pub fn intervals(&self) -> impl Iterator<Item = Interval> + '_ {
        (0..self.len()).map(|i| self.interval(i))
    }

    /// One `beg end len center_run` line per MUPS.
    pub fn dump(&self) -> String {
        (0..self.len())
            .map(|i| {
                format!(
                    "{} {} {} {}\n",
                    self.beg[i], self.end[i], self.len[i], self.center_run[i]
                )
            })
            .collect()
    }

    pub fn heap_bytes(&self) -> usize {
        self.len() * (3 * std::mem::size_of::<u64>() + std::mem::size_of::<usize>())
    }
}

/// MUPSs consisting of a single run.
pub fn single_run_mups<S: Symbol>(rle: &RleString<S>) -> Vec<Mups> {
    // symbol -> (max exponent, run attaining it, number of runs attaining it)
    let mut best: BTreeMap<S, (u64, usize, usize)> = BTreeMap::new();
    for (j, run) in rle.runs().iter().enumerate() {
        let entry = best.entry(run.symbol).or_insert((run.exponent, j, 0));
        if run.exponent > entry.0 {
            *entry = (run.exponent, j, 1);
        } else if run.exponent == entry.0 {
            entry.2 += 1;
        }
    }
    best.into_values()
        .filter(|&(_, _, ties)| ties == 1)
        .map(|(_, j, _)| Mups {
            interval: Interval::new(rle.begin_unchecked(j), rle.end_unchecked(j)),
            center_run: j,
        })
        .collect()
}

/// MUPSs of the form `a^e P a^e` with `P` a non-empty tree node.
pub fn composite_mups<S: Symbol>(
    tree: &RleEertree<S>,
    rle: &RleString<S>,
    rule: MupsRule,
) -> Result<Vec<Mups>> {
    let mut out = Vec::new();
    for p in 0..tree.num_nodes() {
        if tree.node(p).is_root() {
            continue;
        }
        let children = tree.children(p);
        let mut i = 0;
        while i < children.len() {
            let symbol = children[i].0.symbol;
            let mut j = i;
            while j + 1 < children.len() && children[j + 1].0.symbol == symbol {
                j += 1;
            }
            // children[i..=j] share `symbol`, sorted by exponent.
            let (top_label, top) = children[j];
            let second = (j > i).then(|| children[j - 1].0.exponent);
            i = j + 1;

            if tree.node(top).count != 1 {
                continue;
            }
            let trim = match second {
                Some(second) => top_label.exponent - second - 1,
                None => {
                    if rule == MupsRule::Corrected && tree.substring_occurrences(p)? < 2 {
                        continue;
                    }
                    top_label.exponent - 1
                }
            };
            let node = tree.node(top);
            let center_run = node.sample_center_run;
            let len = node.char_len - 2 * trim;
            out.push(Mups {
                interval: Interval::around(rle.center_doubled_unchecked(center_run), len),
                center_run,
            });
        }
    }
    Ok(out)
}

/// Buckets MUPSs by center run and reads them back in position order.
pub fn assemble_sorted<S: Symbol>(found: Vec<Mups>, rle: &RleString<S>) -> Result<MupsList> {
    let mut by_run: Vec<Option<Interval>> = vec![None; rle.num_runs()];
    for mups in found {
        let slot = &mut by_run[mups.center_run];
        if let Some(first) = *slot {
            let (first, second) = if first <= mups.interval {
                (first, mups.interval)
            } else {
                (mups.interval, first)
            };
            return Err(Error::CenterCollision {
                run: mups.center_run,
                first,
                second,
            });
        }
        *slot = Some(mups.interval);
    }
    let mut list = MupsList::default();
    for (run, interval) in by_run.into_iter().enumerate() {
        if let Some(interval) = interval {
            list.beg.push(interval.beg);
            list.end.push(interval.end);
            list.len.push(interval.len());
            list.center_run.push(run);
        }
    }
    Ok(list)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::MaxPalTable;

    fn extract(text: &[u8], rule: MupsRule) -> Result<MupsList> {
        let rle = RleString::encode(text);
        let tree = RleEertree::build(&rle, &MaxPalTable::new(&rle))?;
        MupsList::extract(&tree, &rle, rule)
    }

    fn intervals(list: &MupsList) -> Vec<(u64, u64)> {
        list.intervals().map(|i| (i.beg, i.end)).collect()
    }

    const SAMPLE: &[u8] = b"bbbaabbabbaaabbaaabbb";

    #[test]
    fn single_runs() {
        let rle = RleString::encode(SAMPLE);
        assert!(single_run_mups(&rle).is_empty());

        let rle = RleString::encode(b"ab");
        let got: Vec<_> = single_run_mups(&rle).iter().map(|m| m.interval).collect();
        assert_eq!(got, vec![Interval::new(1, 1), Interval::new(2, 2)]);

        let rle = RleString::encode(b"aacccccccbbabbbb");
        let mut got: Vec<_> = single_run_mups(&rle).iter().map(|m| m.interval).collect();
        got.sort();
        assert_eq!(
            got,
            vec![
                Interval::new(1, 2),
                Interval::new(3, 9),
                Interval::new(13, 16)
            ]
        );
    }

    #[test]
    fn sample_composites() {
        let rle = RleString::encode(SAMPLE);
        let tree = RleEertree::build(&rle, &MaxPalTable::new(&rle)).unwrap();
        let mut got: Vec<_> = composite_mups(&tree, &rle, MupsRule::Corrected)
            .unwrap()
            .iter()
            .map(|m| m.interval)
            .collect();
        got.sort();
        assert_eq!(
            got,
            vec![
                Interval::new(3, 6),
                Interval::new(7, 9),
                Interval::new(8, 16),
                Interval::new(12, 17)
            ]
        );
    }

    #[test]
    fn sample_sorted() {
        let list = extract(SAMPLE, MupsRule::Corrected).unwrap();
        assert_eq!(intervals(&list), vec![(3, 6), (7, 9), (8, 16), (12, 17)]);
        assert_eq!(list.lengths(), &[4, 3, 9, 6]);
        assert_eq!(list.center_runs(), &[1, 3, 5, 6]);
        assert_eq!(list.dump().lines().next(), Some("3 6 4 1"));
    }

    #[test]
    fn literal_rule_collides_on_sample() {
        // a^1 (b^2 a^1 b^2) a^1 = S[5..11] nests the true MUPS S[7..9].
        let err = extract(SAMPLE, MupsRule::Literal).unwrap_err();
        assert_eq!(
            err,
            Error::CenterCollision {
                run: 3,
                first: Interval::new(5, 11),
                second: Interval::new(7, 9),
            }
        );
    }

    #[test]
    fn trivial_strings() {
        assert_eq!(
            intervals(&extract(b"aaaaa", MupsRule::Corrected).unwrap()),
            vec![(1, 5)]
        );
        assert_eq!(
            intervals(&extract(b"ab", MupsRule::Corrected).unwrap()),
            vec![(1, 1), (2, 2)]
        );
        assert!(extract(b"", MupsRule::Corrected).unwrap().is_empty());
        // Distinct symbols per run: exactly m MUPSs.
        assert_eq!(extract(b"abcdefg", MupsRule::Corrected).unwrap().len(), 7);
    }

    #[test]
    fn center_collision_reported() {
        let rle = RleString::encode(b"aba");
        let found = vec![
            Mups {
                interval: Interval::new(2, 2),
                center_run: 1,
            },
            Mups {
                interval: Interval::new(1, 3),
                center_run: 1,
            },
        ];
        assert!(matches!(
            assemble_sorted(found, &rle),
            Err(Error::CenterCollision { run: 1, .. })
        ));
    }
}

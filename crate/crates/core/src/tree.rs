//! Palindromic tree (eertree) over the run alphabet.
//!
//! Construction has two steps. The first runs the usual online eertree
//! construction on the run sequence, which yields one node per distinct
//! palindrome with an RLE-bounded occurrence (both ends on run boundaries)
//! and, after suffix-link propagation, the number of such occurrences. The
//! second walks every run center whose RLE-maximal palindrome is flanked by
//! two runs of the same symbol and records the extension by the shorter
//! flank as a maximal occurrence, creating a node when needed.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::{Error, MaxPalTable, Result, RleString, Run, Symbol};

pub type NodeId = usize;

/// Root of run length -1; parent of every single-run node.
pub const ODD_ROOT: NodeId = 0;
/// Root of run length 0. Never has children, since adjacent runs differ.
pub const EMPTY_ROOT: NodeId = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalNode<S = u8> {
    /// Decompressed length.
    pub char_len: u64,
    /// Number of runs; -1 and 0 for the two roots.
    pub run_len: i64,
    pub suffix_link: NodeId,
    /// Parent and the label of the edge into this node.
    pub parent: Option<(NodeId, Run<S>)>,
    /// RLE-bounded plus maximal occurrences of this palindrome.
    pub count: u64,
    /// Center run of one occurrence (the one that created the node).
    pub sample_center_run: usize,
    pub rle_bounded: bool,
    pub maximal: bool,
}

impl<S> PalNode<S> {
    fn root(run_len: i64, suffix_link: NodeId) -> Self {
        PalNode {
            char_len: 0,
            run_len,
            suffix_link,
            parent: None,
            count: 0,
            sample_center_run: 0,
            rle_bounded: false,
            maximal: false,
        }
    }

    pub fn is_root(&self) -> bool {
        self.run_len <= 0
    }
}

/// The finished RLE-eertree with out-edges sorted by `(symbol, exponent)`.
#[derive(Debug, Clone)]
pub struct RleEertree<S = u8> {
    nodes: Vec<PalNode<S>>,
    edge_start: Vec<usize>,
    edges: Vec<(Run<S>, NodeId)>,
    longest_suffix: Vec<NodeId>,
}

impl<S: Symbol> RleEertree<S> {
    /// Builds the full tree: RLE-bounded nodes with propagated counts, then
    /// run-centered maximal occurrences.
    pub fn build(rle: &RleString<S>, max_pal: &MaxPalTable) -> Result<Self> {
        let mut builder = Builder::bounded(rle);
        builder.propagate_counts();
        builder.add_maximal_nodes(rle, max_pal)?;
        Ok(builder.finish())
    }

    /// Only the first step: RLE-bounded palindromes and their counts.
    pub fn build_bounded(rle: &RleString<S>) -> Self {
        let mut builder = Builder::bounded(rle);
        builder.propagate_counts();
        builder.finish()
    }

    pub fn nodes(&self) -> &[PalNode<S>] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &PalNode<S> {
        &self.nodes[id]
    }

    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    /// Out-edges of `id`, sorted by label.
    pub fn children(&self, id: NodeId) -> &[(Run<S>, NodeId)] {
        &self.edges[self.edge_start[id]..self.edge_start[id + 1]]
    }

    pub fn child(&self, id: NodeId, label: Run<S>) -> Option<NodeId> {
        let children = self.children(id);
        children
            .binary_search_by(|(l, _)| l.cmp(&label))
            .ok()
            .map(|i| children[i].1)
    }

    /// Longest palindromic suffix (in runs) of the first `j + 1` runs.
    pub fn longest_suffix(&self, j: usize) -> NodeId {
        self.longest_suffix[j]
    }

    /// Finds the node spelling the given run sequence, if any.
    pub fn find(&self, runs: &[Run<S>]) -> Option<NodeId> {
        if runs.len().is_multiple_of(2) {
            return None;
        }
        let mid = runs.len() / 2;
        let mut node = self.child(ODD_ROOT, runs[mid])?;
        for k in 1..=mid {
            if runs[mid - k] != runs[mid + k] {
                return None;
            }
            node = self.child(node, runs[mid + k])?;
        }
        Some(node)
    }

    /// Run sequence spelled by `id`, rebuilt from edge labels.
    pub fn spell(&self, id: NodeId) -> Vec<Run<S>> {
        let mut half = Vec::new();
        let mut cur = id;
        while let Some((parent, label)) = self.nodes[cur].parent {
            half.push(label);
            cur = parent;
        }
        // half = [outer, ..., center]
        let mut out = half.clone();
        out.extend(half.iter().rev().skip(1));
        out
    }

    /// Number of occurrences of the node's palindrome anywhere in the text.
    ///
    /// A single run `c^g` occurs `f - g + 1` times inside each `c`-run of
    /// exponent `f >= g`. A composite `c^g P c^g` occurs once per counted
    /// occurrence of each sibling `c^f P c^f` with `f >= g`: every
    /// occurrence extends to exactly one RLE-bounded or maximal one.
    pub fn substring_occurrences(&self, id: NodeId) -> Result<u64> {
        let (parent, label) = self.nodes[id].parent.ok_or(Error::RootNode { node: id })?;
        let siblings = self.children(parent);
        let from = siblings.partition_point(|(l, _)| *l < label);
        let same_symbol = siblings[from..]
            .iter()
            .take_while(|(l, _)| l.symbol == label.symbol);
        let total = if parent == ODD_ROOT {
            same_symbol
                .map(|(l, v)| self.nodes[*v].count * (l.exponent - label.exponent + 1))
                .sum()
        } else {
            same_symbol.map(|(_, v)| self.nodes[*v].count).sum()
        };
        Ok(total)
    }

    /// One line per node followed by one line per edge.
    pub fn dump_with<F>(&self, mut fmt_symbol: F) -> String
    where
        F: FnMut(S) -> String,
    {
        let mut out = String::new();
        for (id, node) in self.nodes.iter().enumerate() {
            let flags = match (node.rle_bounded, node.maximal) {
                (true, true) => "RB|MX",
                (true, false) => "RB",
                (false, true) => "MX",
                (false, false) => "-",
            };
            let _ = writeln!(
                out,
                "{id} len={} runs={} cnt={} ctr={} flags={flags}",
                node.char_len, node.run_len, node.count, node.sample_center_run
            );
        }
        for id in 0..self.nodes.len() {
            for (label, child) in self.children(id) {
                let _ = writeln!(
                    out,
                    "{id} -({},{})-> {child}",
                    fmt_symbol(label.symbol),
                    label.exponent
                );
            }
        }
        out
    }
}

struct Builder<S> {
    nodes: Vec<PalNode<S>>,
    edges: BTreeMap<(NodeId, Run<S>), NodeId>,
    longest_suffix: Vec<NodeId>,
    /// Number of nodes created in the first step.
    bounded_nodes: usize,
}

impl<S: Symbol> Builder<S> {
    fn bounded(rle: &RleString<S>) -> Self {
        let runs = rle.runs();
        let mut b = Builder {
            nodes: vec![PalNode::root(-1, ODD_ROOT), PalNode::root(0, ODD_ROOT)],
            edges: BTreeMap::new(),
            longest_suffix: Vec::with_capacity(runs.len()),
            bounded_nodes: 0,
        };
        let mut last = EMPTY_ROOT;
        for (j, &run) in runs.iter().enumerate() {
            let cur = b.extendable_suffix(runs, j, last);
            last = match b.edges.get(&(cur, run)) {
                Some(&v) => v,
                None => {
                    let suffix_link = if cur == ODD_ROOT {
                        EMPTY_ROOT
                    } else {
                        let w = b.extendable_suffix(runs, j, b.nodes[cur].suffix_link);
                        b.edges[&(w, run)]
                    };
                    let run_len = b.nodes[cur].run_len + 2;
                    let char_len = if cur == ODD_ROOT {
                        run.exponent
                    } else {
                        b.nodes[cur].char_len + 2 * run.exponent
                    };
                    let v = b.nodes.len();
                    b.nodes.push(PalNode {
                        char_len,
                        run_len,
                        suffix_link,
                        parent: Some((cur, run)),
                        count: 0,
                        sample_center_run: j - (run_len as usize - 1) / 2,
                        rle_bounded: true,
                        maximal: false,
                    });
                    b.edges.insert((cur, run), v);
                    v
                }
            };
            b.nodes[last].count += 1;
            b.longest_suffix.push(last);
        }
        b.bounded_nodes = b.nodes.len();
        b
    }

    /// Follows suffix links from `node` until the palindrome can be wrapped
    /// by run `j` on both sides.
    fn extendable_suffix(&self, runs: &[Run<S>], j: usize, mut node: NodeId) -> NodeId {
        loop {
            let len = self.nodes[node].run_len;
            if len == -1 {
                return node;
            }
            let len = len as usize;
            if j > len && runs[j - len - 1] == runs[j] {
                return node;
            }
            node = self.nodes[node].suffix_link;
        }
    }

    fn propagate_counts(&mut self) {
        // Suffix links always point to earlier nodes.
        for v in (2..self.nodes.len()).rev() {
            let link = self.nodes[v].suffix_link;
            if link > EMPTY_ROOT {
                self.nodes[link].count += self.nodes[v].count;
            }
        }
    }

    fn add_maximal_nodes(&mut self, rle: &RleString<S>, max_pal: &MaxPalTable) -> Result<()> {
        let runs = rle.runs();
        let m = runs.len();
        let ancestors = LevelAncestors::new(&self.nodes[..self.bounded_nodes]);
        for l in 0..m {
            let r = max_pal.rle_radius(l);
            if r >= l || l + r + 1 >= m {
                continue;
            }
            let (left, right) = (runs[l - r - 1], runs[l + r + 1]);
            if left.symbol != right.symbol {
                continue;
            }
            let core = ancestors
                .find(&self.nodes, self.longest_suffix[l + r], 2 * r as i64 + 1)
                .ok_or(Error::MissingCoreNode { run: l })?;
            let label = Run::new(left.symbol, left.exponent.min(right.exponent));
            match self.edges.get(&(core, label)) {
                Some(&v) => {
                    let node = &mut self.nodes[v];
                    node.count += 1;
                    node.maximal = true;
                }
                None => {
                    let v = self.nodes.len();
                    let (char_len, run_len) = (self.nodes[core].char_len, self.nodes[core].run_len);
                    self.nodes.push(PalNode {
                        char_len: char_len + 2 * label.exponent,
                        run_len: run_len + 2,
                        // Maximal-only nodes are leaves and are never
                        // extended, so their suffix links are unused.
                        suffix_link: EMPTY_ROOT,
                        parent: Some((core, label)),
                        count: 1,
                        sample_center_run: l,
                        rle_bounded: false,
                        maximal: true,
                    });
                    self.edges.insert((core, label), v);
                }
            }
        }
        Ok(())
    }

    fn finish(self) -> RleEertree<S> {
        let mut edge_start = vec![0usize; self.nodes.len() + 1];
        for &(parent, _) in self.edges.keys() {
            edge_start[parent + 1] += 1;
        }
        for i in 0..self.nodes.len() {
            edge_start[i + 1] += edge_start[i];
        }
        // BTreeMap iteration is already ordered by (parent, label).
        let edges = self
            .edges
            .into_iter()
            .map(|((_, label), child)| (label, child))
            .collect();
        RleEertree {
            nodes: self.nodes,
            edge_start,
            edges,
            longest_suffix: self.longest_suffix,
        }
    }
}

/// Binary lifting over suffix links.
struct LevelAncestors {
    jumps: Vec<Vec<NodeId>>,
}

impl LevelAncestors {
    fn new<S>(nodes: &[PalNode<S>]) -> Self {
        let n = nodes.len();
        let levels = (usize::BITS - n.leading_zeros()).max(1) as usize;
        let mut jumps = Vec::with_capacity(levels);
        jumps.push(
            nodes
                .iter()
                .map(|node| node.suffix_link)
                .collect::<Vec<_>>(),
        );
        for k in 1..levels {
            let prev = &jumps[k - 1];
            let next = (0..n).map(|v| prev[prev[v]]).collect();
            jumps.push(next);
        }
        LevelAncestors { jumps }
    }

    /// Ancestor of `node` (inclusive) on the suffix-link chain with exactly
    /// `run_len` runs. Run lengths strictly decrease along the chain.
    fn find<S>(&self, nodes: &[PalNode<S>], mut node: NodeId, run_len: i64) -> Option<NodeId> {
        if nodes[node].run_len < run_len {
            return None;
        }
        for level in self.jumps.iter().rev() {
            let up = level[node];
            if nodes[up].run_len >= run_len {
                node = up;
            }
        }
        (nodes[node].run_len == run_len).then_some(node)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn runs(spec: &[(u8, u64)]) -> Vec<Run> {
        spec.iter().map(|&(s, e)| Run::new(s, e)).collect()
    }

    fn sample() -> RleString {
        RleString::encode(b"bbbaabbabbaaabbaaabbb")
    }

    #[test]
    fn bounded_nodes_of_sample() {
        let rle = sample();
        let tree = RleEertree::build_bounded(&rle);
        let mut spelled: Vec<Vec<Run>> = (2..tree.num_nodes()).map(|v| tree.spell(v)).collect();
        spelled.sort();
        let mut expected = vec![
            runs(&[(b'a', 1)]),
            runs(&[(b'a', 2)]),
            runs(&[(b'a', 3)]),
            runs(&[(b'b', 2)]),
            runs(&[(b'b', 3)]),
            runs(&[(b'b', 2), (b'a', 1), (b'b', 2)]),
            runs(&[(b'b', 2), (b'a', 3), (b'b', 2)]),
            runs(&[(b'a', 3), (b'b', 2), (b'a', 3)]),
        ];
        expected.sort();
        assert_eq!(spelled, expected);
        assert!(tree.num_nodes() - 2 <= rle.num_runs());

        let b2 = tree.find(&runs(&[(b'b', 2)])).unwrap();
        assert_eq!(tree.node(b2).count, 3);
        let b2a3b2 = tree
            .find(&runs(&[(b'b', 2), (b'a', 3), (b'b', 2)]))
            .unwrap();
        assert_eq!(tree.node(b2a3b2).count, 1);
        assert_eq!(tree.node(b2a3b2).sample_center_run, 5);
    }

    #[test]
    fn maximal_nodes_of_sample() {
        let rle = sample();
        let tree = RleEertree::build(&rle, &MaxPalTable::new(&rle)).unwrap();
        let gray = tree
            .find(&runs(&[
                (b'a', 2),
                (b'b', 2),
                (b'a', 1),
                (b'b', 2),
                (b'a', 2),
            ]))
            .unwrap();
        let node = tree.node(gray);
        assert_eq!(
            (node.count, node.rle_bounded, node.maximal),
            (1, false, true)
        );
        assert_eq!(node.sample_center_run, 3);
        assert_eq!(node.char_len, 9);

        let b2a3b2 = tree
            .find(&runs(&[(b'b', 2), (b'a', 3), (b'b', 2)]))
            .unwrap();
        let node = tree.node(b2a3b2);
        assert_eq!(
            (node.count, node.rle_bounded, node.maximal),
            (2, true, true)
        );
        assert!(tree.num_nodes() <= 2 * rle.num_runs() + 1);
    }

    #[test]
    fn maximal_extension_of_caabbcccbbaaaac() {
        let rle = RleString::encode(b"caabbcccbbaaaac");
        let tree = RleEertree::build(&rle, &MaxPalTable::new(&rle)).unwrap();
        let v = tree
            .find(&runs(&[
                (b'a', 2),
                (b'b', 2),
                (b'c', 3),
                (b'b', 2),
                (b'a', 2),
            ]))
            .unwrap();
        assert_eq!(tree.node(v).char_len, 11);
        assert!(tree.node(v).maximal);
    }

    #[test]
    fn single_run_and_aba() {
        let rle = RleString::encode(b"aaaaa");
        let tree = RleEertree::build(&rle, &MaxPalTable::new(&rle)).unwrap();
        assert_eq!(tree.num_nodes(), 3);
        assert_eq!(tree.node(2).count, 1);
        assert_eq!(tree.node(2).char_len, 5);

        let rle = RleString::encode(b"aba");
        let tree = RleEertree::build_bounded(&rle);
        let mut spelled: Vec<Vec<Run>> = (2..tree.num_nodes()).map(|v| tree.spell(v)).collect();
        spelled.sort();
        assert_eq!(
            spelled,
            vec![
                runs(&[(b'a', 1)]),
                runs(&[(b'a', 1), (b'b', 1), (b'a', 1)]),
                runs(&[(b'b', 1)]),
            ]
        );
    }

    #[test]
    fn occurrences_in_sample() {
        let rle = sample();
        let tree = RleEertree::build(&rle, &MaxPalTable::new(&rle)).unwrap();
        let a2 = tree.find(&runs(&[(b'a', 2)])).unwrap();
        assert_eq!(tree.substring_occurrences(a2), Ok(5));
        let bab = tree
            .find(&runs(&[(b'b', 2), (b'a', 1), (b'b', 2)]))
            .unwrap();
        assert_eq!(tree.substring_occurrences(bab), Ok(1));
        let b2a3b2 = tree
            .find(&runs(&[(b'b', 2), (b'a', 3), (b'b', 2)]))
            .unwrap();
        assert_eq!(tree.substring_occurrences(b2a3b2), Ok(2));
        assert_eq!(
            tree.substring_occurrences(ODD_ROOT),
            Err(Error::RootNode { node: ODD_ROOT })
        );
    }

    #[test]
    fn edges_sorted_and_labels_consistent() {
        let rle = RleString::encode(b"abacabadabacabaeeabacaba");
        let tree = RleEertree::build(&rle, &MaxPalTable::new(&rle)).unwrap();
        for u in 0..tree.num_nodes() {
            let children = tree.children(u);
            assert!(children.windows(2).all(|w| w[0].0 < w[1].0));
            for &(label, v) in children {
                let (pu, pv) = (tree.node(u), tree.node(v));
                assert_eq!(pv.run_len, pu.run_len.max(-1) + 2);
                if u != ODD_ROOT {
                    assert_eq!(pv.char_len, pu.char_len + 2 * label.exponent);
                    let incoming = pu.parent.unwrap().1;
                    assert_ne!(incoming.symbol, label.symbol);
                }
            }
        }
    }

    #[test]
    fn dump_format() {
        let rle = RleString::encode(b"aba");
        let tree = RleEertree::build(&rle, &MaxPalTable::new(&rle)).unwrap();
        let dump = tree.dump_with(|s| (s as char).to_string());
        assert!(dump.contains("2 len=1 runs=1 cnt=2 ctr=0 flags=RB"));
        assert!(dump.contains("0 -(a,1)-> 2"));
    }
}

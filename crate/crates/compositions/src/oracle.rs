//! Ground-truth engine. Exhaustively enumerates set partitions of V(G)
//! via restricted-growth strings, counts the partitions whose blocks all
//! induce connected subgraphs, and enumerates families of disjoint bad
//! subsets to build coefficient tables from first principles.
//!
//! Everything here is deliberately brute force; the closed forms in
//! `formulas` are validated against it.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{Graph, UnionFind};
use crate::spectrum::{CoefficientTable, CompositionVector};

/// Default cap on the oracle's input size. Bell(12) is about 4.2e6
/// partitions; beyond that the oracle refuses rather than run for hours.
pub const DEFAULT_ORACLE_LIMIT: usize = 12;

/// Environment variable overriding the oracle size cap.
pub const ORACLE_LIMIT_ENV: &str = "GC_ORACLE_LIMIT";

/// Exhaustive enumeration engine with a size cap and optional internal
/// parallelism. Results never depend on the thread count.
#[derive(Debug, Clone)]
pub struct Oracle {
    limit: usize,
    threads: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            limit: DEFAULT_ORACLE_LIMIT,
            threads: 1,
        }
    }
}

impl Oracle {
    pub fn new(limit: usize) -> Self {
        Oracle { limit, threads: 1 }
    }

    /// Default limit, overridden by `GC_ORACLE_LIMIT` when set.
    pub fn from_env() -> Self {
        let limit = std::env::var(ORACLE_LIMIT_ENV)
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(DEFAULT_ORACLE_LIMIT);
        Oracle { limit, threads: 1 }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn check_size(&self, g: &Graph) -> Result<()> {
        let n = g.vertex_count();
        if n == 0 {
            return Err(Error::Precondition("oracle requires at least one vertex".into()));
        }
        if n > self.limit || n > 64 {
            return Err(Error::OracleLimit {
                n,
                limit: self.limit.min(64),
            });
        }
        Ok(())
    }

    /// counts[k] = number of partitions of V(g) into exactly k blocks,
    /// each inducing a connected subgraph. Every set partition is visited
    /// exactly once via its restricted-growth string.
    pub fn composition_spectrum(&self, g: &Graph) -> Result<CompositionVector> {
        self.check_size(g)?;
        let n = g.vertex_count();
        let edges: Vec<(usize, usize)> = g.edges().collect();

        if self.threads <= 1 {
            let mut tally = vec![0u64; n + 1];
            let mut assignment = vec![0usize; n];
            complete_partition(&edges, n, &mut assignment, 1, 1, &mut tally);
            return Ok(tally_to_spectrum(n, &tally));
        }

        // Parallel mode: enumerate RGS prefixes, split them round-robin,
        // and let each worker complete its share. The merged tally is
        // identical to the sequential walk.
        let prefix_len = n.min(5);
        let prefixes = collect_prefixes(prefix_len);

        let chunks: Vec<Vec<(Vec<usize>, usize)>> = {
            let mut chunks = vec![Vec::new(); self.threads];
            for (i, p) in prefixes.into_iter().enumerate() {
                chunks[i % self.threads].push(p);
            }
            chunks
        };
        let tallies: Vec<Vec<u64>> = std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .iter()
                .map(|chunk| {
                    let edges = &edges;
                    scope.spawn(move || {
                        let mut tally = vec![0u64; n + 1];
                        for (prefix, used) in chunk {
                            let mut assignment = vec![0usize; n];
                            assignment[..prefix.len()].copy_from_slice(prefix);
                            complete_partition(edges, n, &mut assignment, prefix.len(), *used, &mut tally);
                        }
                        tally
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let mut tally = vec![0u64; n + 1];
        for t in tallies {
            for (a, b) in tally.iter_mut().zip(t) {
                *a += b;
            }
        }
        Ok(tally_to_spectrum(n, &tally))
    }

    /// C(G): total number of compositions.
    pub fn composition_count(&self, g: &Graph) -> Result<BigUint> {
        Ok(self.composition_spectrum(g)?.total())
    }

    /// entry(j, m) = number of unordered families of m pairwise-disjoint
    /// bad subsets of V(g) covering j vertices in total. Bad subsets are
    /// enumerated by bitmask, then families are counted by an
    /// index-ordered search so each unordered family is seen once.
    pub fn bad_coefficient_table(&self, g: &Graph) -> Result<CoefficientTable> {
        self.check_size(g)?;
        let n = g.vertex_count();
        let mut bad: Vec<u64> = Vec::new();
        for mask in 1u64..(1u64 << n) {
            if mask.count_ones() >= 2 && g.is_bad_mask(mask) {
                bad.push(mask);
            }
        }
        let mut table = CoefficientTable::new(n);
        let one = BigUint::one();
        let mut stack: Vec<(usize, u64, usize)> = Vec::new(); // (next index, used mask, m)
        for (i, &mask) in bad.iter().enumerate() {
            stack.push((i, mask, 1));
        }
        while let Some((idx, used, m)) = stack.pop() {
            table.add(used.count_ones() as usize, m, &one);
            for (off, &mask) in bad[idx + 1..].iter().enumerate() {
                if mask & used == 0 {
                    stack.push((idx + 1 + off, used | mask, m + 1));
                }
            }
        }
        Ok(table)
    }
}

fn tally_to_spectrum(n: usize, tally: &[u64]) -> CompositionVector {
    CompositionVector::from_fn(n, |k| BigUint::from(tally[k]))
}

/// Recursive restricted-growth walk: vertex `v` may join any block
/// 0..used-1 or open block `used`. At the leaf, count the partition if
/// every block induces a connected subgraph.
fn complete_partition(
    edges: &[(usize, usize)],
    n: usize,
    assignment: &mut [usize],
    v: usize,
    used: usize,
    tally: &mut [u64],
) {
    if v == n {
        let blocks = used;
        let mut uf = UnionFind::new(n);
        for &(a, b) in edges {
            if assignment[a] == assignment[b] {
                uf.union(a, b);
            }
        }
        // each block is connected iff merging same-block edges leaves
        // exactly `blocks` components
        if uf.component_count() == blocks {
            tally[blocks] += 1;
        }
        return;
    }
    for block in 0..used {
        assignment[v] = block;
        complete_partition(edges, n, assignment, v + 1, used, tally);
    }
    assignment[v] = used;
    complete_partition(edges, n, assignment, v + 1, used + 1, tally);
}

/// Enumerate all restricted-growth prefixes of the given length together
/// with the number of blocks each one uses.
fn collect_prefixes(len: usize) -> Vec<(Vec<usize>, usize)> {
    fn rec(v: usize, used: usize, prefix: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, usize)>) {
        if v == prefix.len() {
            out.push((prefix.clone(), used));
            return;
        }
        for block in 0..used {
            prefix[v] = block;
            rec(v + 1, used, prefix, out);
        }
        prefix[v] = used;
        rec(v + 1, used + 1, prefix, out);
    }
    let mut out = Vec::new();
    rec(1, 1, &mut vec![0; len], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{bell, stirling2};
    use crate::graph::{build_family, FamilySpec};

    fn spectrum_u32(s: &CompositionVector) -> Vec<u32> {
        s.iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn path_spectrum() {
        let oracle = Oracle::default();
        let p4 = build_family(&FamilySpec::Path(4)).unwrap();
        let s = oracle.composition_spectrum(&p4).unwrap();
        assert_eq!(spectrum_u32(&s), vec![1, 3, 3, 1]);
    }

    #[test]
    fn complete_spectrum_is_stirling_row() {
        let oracle = Oracle::default();
        for n in 1..=7 {
            let kn = build_family(&FamilySpec::Complete(n)).unwrap();
            let s = oracle.composition_spectrum(&kn).unwrap();
            for k in 1..=n {
                assert_eq!(s.get(k), stirling2(n, k as isize), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn disconnected_graph_spectrum() {
        let oracle = Oracle::default();
        let d2 = build_family(&FamilySpec::Matching(2)).unwrap();
        let s = oracle.composition_spectrum(&d2).unwrap();
        assert_eq!(spectrum_u32(&s), vec![0, 1, 2, 1]);
    }

    #[test]
    fn composition_counts() {
        let oracle = Oracle::default();
        let k4 = build_family(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(oracle.composition_count(&k4).unwrap(), BigUint::from(15u32));
        let p3 = build_family(&FamilySpec::Path(3)).unwrap();
        assert_eq!(oracle.composition_count(&p3).unwrap(), BigUint::from(4u32));
        let v1 = build_family(&FamilySpec::Path(1)).unwrap();
        assert_eq!(oracle.composition_count(&v1).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn oracle_limit_enforced() {
        let oracle = Oracle::new(4);
        let p5 = build_family(&FamilySpec::Path(5)).unwrap();
        assert!(matches!(
            oracle.composition_spectrum(&p5),
            Err(Error::OracleLimit { n: 5, limit: 4 })
        ));
    }

    #[test]
    fn partition_walk_is_exhaustive() {
        // the complete graph accepts every partition, so the walk visits
        // Bell(n) partitions and buckets them into Stirling counts
        let oracle = Oracle::default();
        for n in 1..=8 {
            let kn = build_family(&FamilySpec::Complete(n)).unwrap();
            let s = oracle.composition_spectrum(&kn).unwrap();
            assert_eq!(s.total(), bell(n));
        }
        // an edgeless graph admits only the all-singletons composition
        for n in 1..=6 {
            let empty = Graph::new(n, Vec::new()).unwrap();
            let s = oracle.composition_spectrum(&empty).unwrap();
            assert_eq!(s.total(), BigUint::one());
            assert_eq!(s.get(n), BigUint::one());
        }
    }

    #[test]
    fn parallel_walk_matches_sequential() {
        let c7 = build_family(&FamilySpec::Cycle(7)).unwrap();
        let seq = Oracle::default().composition_spectrum(&c7).unwrap();
        for threads in [2, 3, 8] {
            let par = Oracle::default()
                .with_threads(threads)
                .composition_spectrum(&c7)
                .unwrap();
            assert_eq!(seq, par);
        }
    }

    proptest::proptest! {
        #[test]
        fn spectrum_shape_invariants(n in 1usize..6, edge_bits in 0u32..1024) {
            // random graph from the low bits of edge_bits
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| edge_bits >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(n, edges).unwrap();
            let s = Oracle::default().composition_spectrum(&g).unwrap();
            proptest::prop_assert_eq!(s.get(n), BigUint::one());
            let c1 = if g.is_connected() { BigUint::one() } else { BigUint::from(0u32) };
            proptest::prop_assert_eq!(s.get(1), c1);
            proptest::prop_assert!(s.total() <= bell(n));
        }
    }

    #[test]
    fn bad_tables_small() {
        let oracle = Oracle::default();

        let p2 = build_family(&FamilySpec::Path(2)).unwrap();
        let t = oracle.bad_coefficient_table(&p2).unwrap();
        assert_eq!(t.entry(0, 0), BigUint::from(1u32));
        assert_eq!(t.entry(2, 1), BigUint::from(1u32));
        assert_eq!(t.iter().count(), 2);

        let p3 = build_family(&FamilySpec::Path(3)).unwrap();
        let t = oracle.bad_coefficient_table(&p3).unwrap();
        assert_eq!(t.entry(2, 1), BigUint::from(2u32));
        assert_eq!(t.entry(3, 1), BigUint::from(1u32));
        assert_eq!(t.iter().count(), 3);

        let v1 = build_family(&FamilySpec::Path(1)).unwrap();
        let t = oracle.bad_coefficient_table(&v1).unwrap();
        assert_eq!(t.entry(0, 0), BigUint::from(1u32));
        assert_eq!(t.iter().count(), 1);
    }

    #[test]
    fn bad_table_c4_whole_cycle() {
        let oracle = Oracle::default();
        let c4 = build_family(&FamilySpec::Cycle(4)).unwrap();
        let t = oracle.bad_coefficient_table(&c4).unwrap();
        assert_eq!(t.entry(2, 1), BigUint::from(4u32)); // four edges
        assert_eq!(t.entry(3, 1), BigUint::from(4u32)); // four 2-subpaths
        assert_eq!(t.entry(4, 1), BigUint::from(1u32)); // the whole cycle
        assert_eq!(t.entry(4, 2), BigUint::from(2u32)); // opposite edge pairs
    }
}

//! Brute-force reference implementations, written without the library's
//! distance or search code. Only `Graph` adjacency is shared.

#![allow(dead_code)]

use geodekit::Graph;
use itertools::Itertools;

pub struct Oracle {
    pub n: usize,
    pub dist: Vec<Vec<usize>>,
    /// All geodesics of each pair `u < v`, as vertex lists from `u`.
    pub geodesics: Vec<Vec<Vec<Vec<usize>>>>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let dist: Vec<Vec<usize>> = (0..n).map(|s| bfs(g, s)).collect();
        let mut geodesics = vec![vec![Vec::new(); n]; n];
        for u in 0..n {
            for v in u + 1..n {
                let mut out = Vec::new();
                let mut stack = vec![u];
                walk(g, &dist, v, &mut stack, &mut out);
                geodesics[u][v] = out;
            }
        }
        Oracle { n, dist, geodesics }
    }

    pub fn diameter(&self) -> usize {
        self.dist.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn paths(&self, a: usize, b: usize) -> &[Vec<usize>] {
        &self.geodesics[a.min(b)][a.max(b)]
    }

    pub fn interval(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&w| self.dist[a][w] + self.dist[w][b] == self.dist[a][b])
            .collect()
    }

    pub fn is_geodetic_set(&self, s: &[usize]) -> bool {
        if self.n == 1 {
            return true;
        }
        let mut covered = vec![false; self.n];
        for &v in s {
            covered[v] = true;
        }
        for (a, b) in s.iter().tuple_combinations() {
            for w in self.interval(*a, *b) {
                covered[w] = true;
            }
        }
        covered.iter().all(|&c| c)
    }

    /// Tries every combination of one geodesic per pair.
    pub fn covers(&self, s: &[usize], pairs: &[(usize, usize)]) -> bool {
        let choices: Vec<&[Vec<usize>]> = pairs.iter().map(|&(a, b)| self.paths(a, b)).collect();
        let mut base = vec![false; self.n];
        for &v in s {
            base[v] = true;
        }
        choices
            .iter()
            .copied()
            .multi_cartesian_product()
            .any(|pick| {
                let mut covered = base.clone();
                for p in pick {
                    for &v in p {
                        covered[v] = true;
                    }
                }
                covered.iter().all(|&c| c)
            })
            || (pairs.is_empty() && base.iter().all(|&c| c))
    }

    pub fn is_sg_set(&self, s: &[usize]) -> bool {
        if self.n == 1 {
            return s == [0];
        }
        let pairs: Vec<(usize, usize)> = s.iter().copied().tuple_combinations().collect();
        !pairs.is_empty() && self.covers(s, &pairs)
    }

    pub fn geodetic_number(&self) -> usize {
        (1..=self.n)
            .find(|&k| {
                (0..self.n)
                    .combinations(k)
                    .any(|s| self.is_geodetic_set(&s))
            })
            .unwrap()
    }

    /// `sg` and every strong geodetic set of that size, lexicographically.
    pub fn min_sg_sets(&self) -> (usize, Vec<Vec<usize>>) {
        for k in 1..=self.n {
            let sets: Vec<Vec<usize>> = (0..self.n)
                .combinations(k)
                .filter(|s| self.is_sg_set(s))
                .collect();
            if !sets.is_empty() {
                return (k, sets);
            }
        }
        unreachable!()
    }

    pub fn core_of_set(&self, s: &[usize]) -> usize {
        if self.n == 1 {
            return 1;
        }
        for k in 1..=s.len() {
            for x in s.iter().copied().combinations(k) {
                let mut pairs: Vec<(usize, usize)> = x
                    .iter()
                    .flat_map(|&a| {
                        s.iter()
                            .filter(move |&&b| b != a)
                            .map(move |&b| (a.min(b), a.max(b)))
                    })
                    .collect();
                pairs.sort_unstable();
                pairs.dedup();
                if self.covers(s, &pairs) {
                    return k;
                }
            }
        }
        unreachable!("s is strong geodetic")
    }

    pub fn sgc(&self) -> usize {
        let (_, sets) = self.min_sg_sets();
        sets.iter().map(|s| self.core_of_set(s)).min().unwrap()
    }
}

fn bfs(g: &Graph, s: usize) -> Vec<usize> {
    let mut d = vec![usize::MAX; g.order()];
    d[s] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if d[w] == usize::MAX {
                d[w] = d[u] + 1;
                queue.push_back(w);
            }
        }
    }
    d
}

fn walk(
    g: &Graph,
    dist: &[Vec<usize>],
    target: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let u = *stack.last().unwrap();
    if u == target {
        out.push(stack.clone());
        return;
    }
    for &w in g.neighbors(u) {
        if dist[w][target] + 1 == dist[u][target] {
            stack.push(w);
            walk(g, dist, target, stack, out);
            stack.pop();
        }
    }
}

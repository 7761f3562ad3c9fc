//! Lexicographic streams of candidate vertex sets, evaluated in parallel
//! chunks. Results are reduced in stream order, so answers do not depend on
//! the number of worker threads.

use crate::limits::{Budget, Limit};
use rayon::prelude::*;

const CHUNK: usize = 4096;

/// `k`-subsets of `pool` in lexicographic order.
pub(crate) struct Combinations<'p> {
    pool: &'p [usize],
    idx: Vec<usize>,
    done: bool,
}

impl<'p> Combinations<'p> {
    pub fn new(pool: &'p [usize], k: usize) -> Self {
        Combinations {
            pool,
            idx: (0..k).collect(),
            done: k > pool.len(),
        }
    }
}

impl Iterator for Combinations<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.iter().map(|&i| self.pool[i]).collect();
        let k = self.idx.len();
        let n = self.pool.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

pub(crate) enum Mode {
    First,
    All,
}

/// Every set `forced ∪ C` for `C` a `k`-subset of `pool`, in lexicographic
/// order of the full set. `forced` must be disjoint from `pool`.
///
/// Returns accepted sets (only the first one in `Mode::First`), or the limit
/// that stopped the stream. In `Mode::All` the accepted prefix gathered so far
/// is returned alongside the limit.
pub(crate) fn scan<T, F>(
    pool: &[usize],
    forced: &[usize],
    k: usize,
    mode: Mode,
    budget: &Budget,
    eval: F,
) -> (Vec<(Vec<usize>, T)>, Option<Limit>)
where
    T: Send,
    F: Fn(&[usize]) -> Result<Option<T>, Limit> + Sync,
{
    let mut found = Vec::new();
    let mut combos = Combinations::new(pool, k);
    loop {
        let chunk: Vec<Vec<usize>> = combos
            .by_ref()
            .take(CHUNK)
            .map(|c| {
                let mut set = c;
                set.extend_from_slice(forced);
                set.sort_unstable();
                set
            })
            .collect();
        if chunk.is_empty() {
            return (found, None);
        }
        let run = |set: &Vec<usize>| -> Result<Option<T>, Limit> {
            budget.tick()?;
            eval(set)
        };
        match mode {
            Mode::First => {
                let hit = chunk.par_iter().find_map_first(|set| match run(set) {
                    Ok(None) => None,
                    Ok(Some(t)) => Some(Ok((set.clone(), t))),
                    Err(l) => Some(Err(l)),
                });
                match hit {
                    Some(Ok(x)) => {
                        found.push(x);
                        return (found, None);
                    }
                    Some(Err(l)) => return (found, Some(l)),
                    None => {}
                }
            }
            Mode::All => {
                let results: Vec<Result<Option<T>, Limit>> = chunk.par_iter().map(run).collect();
                for (set, r) in chunk.into_iter().zip(results) {
                    match r {
                        Ok(Some(t)) => found.push((set, t)),
                        Ok(None) => {}
                        Err(l) => return (found, Some(l)),
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::SearchLimits;

    #[test]
    fn combinations_lexicographic() {
        let pool = [1, 3, 5, 7];
        let all: Vec<Vec<usize>> = Combinations::new(&pool, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![1, 3]);
        assert_eq!(all[5], vec![5, 7]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Combinations::new(&pool, 0).count(), 1);
        assert_eq!(Combinations::new(&pool, 5).count(), 0);
    }

    #[test]
    fn forced_vertices_merge_in_order() {
        let budget = Budget::new(&SearchLimits::default());
        let (found, limit) = scan(&[0, 2, 4], &[1], 1, Mode::All, &budget, |s| {
            Ok(Some(s.len()))
        });
        assert!(limit.is_none());
        let sets: Vec<Vec<usize>> = found.into_iter().map(|(s, _)| s).collect();
        assert_eq!(sets, vec![vec![0, 1], vec![1, 2], vec![1, 4]]);
    }

    #[test]
    fn first_match_is_lexicographically_least() {
        let budget = Budget::new(&SearchLimits::default());
        let pool: Vec<usize> = (0..12).collect();
        let (found, _) = scan(&pool, &[], 3, Mode::First, &budget, |s| {
            Ok((s[0] >= 2 && s[2] == 9).then_some(()))
        });
        assert_eq!(found[0].0, vec![2, 3, 9]);
    }
}

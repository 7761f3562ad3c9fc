//! Graph families and the Cartesian product.
//!
//! Vertex numbering is fixed per constructor: original vertices first, then
//! auxiliary vertices grouped by the edge (in canonical edge order) or part
//! they belong to. Certificates therefore name the same vertices on every run.

use crate::error::{Error, Result};
use crate::graph::{Graph, Path};
use crate::vertex_set::VertexSet;
use rand::Rng;

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("path needs n >= 1"));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid("cycle needs n >= 3"));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("complete graph needs n >= 1"));
    }
    Graph::new(n, all_pairs(0..n))
}

/// Parts occupy contiguous index blocks in the given order.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.len() < 2 || parts.contains(&0) {
        return Err(Error::invalid(
            "complete multipartite graph needs at least two non-empty parts",
        ));
    }
    let mut part_of = Vec::new();
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(p).take(size));
    }
    let n = part_of.len();
    Graph::new(
        n,
        all_pairs(0..n).filter(|&(u, v)| part_of[u] != part_of[v]),
    )
}

/// `K_{1,k}` with the center at index 0.
pub fn star(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::invalid("star needs k >= 1"));
    }
    Graph::new(k + 1, (1..=k).map(|i| (0, i)))
}

pub fn tree_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    let g = Graph::new(n, edges.iter().copied())?;
    if !g.is_tree() {
        return Err(Error::invalid("edges do not form a tree"));
    }
    Ok(g)
}

/// `K_{2,...,2}` for even `n`; odd `n` appends a singleton part.
pub fn cocktail_party(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid("cocktail-party graph needs n >= 3"));
    }
    let mut parts = vec![2; n / 2];
    if n % 2 == 1 {
        parts.push(1);
    }
    complete_multipartite(&parts)
}

/// Clique on `0..m`, independent set on `m..m+n`, all cross edges.
pub fn split_graph(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(Error::invalid("split graph needs m >= 1 and n >= 1"));
    }
    let clique = all_pairs(0..m);
    let cross = (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v)));
    Graph::new(m + n, clique.chain(cross))
}

/// Each edge subdivided once; the vertex on edge `i` is `n + i`.
pub fn subdivision(g: &Graph) -> Result<Graph> {
    let n = g.order();
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(i, &(u, v))| [(u, n + i), (v, n + i)]);
    Graph::new(n + g.size(), edges)
}

/// The subdivision graph plus a clique on all subdivision vertices.
///
/// The defining sentence names a single added edge, but the drawing of
/// `Ŝ(K_4)` has every one of the 15 edges among the 6 subdivision vertices,
/// and the statement `sg(Ŝ(G)) = n(G)` needs that reading.
pub fn hat_subdivision(g: &Graph) -> Result<Graph> {
    if g.size() < 2 {
        return Err(Error::invalid("hat subdivision needs at least two edges"));
    }
    let n = g.order();
    let s = subdivision(g)?;
    let clique = all_pairs(n..n + g.size());
    Graph::new(s.order(), s.edges().iter().copied().chain(clique))
}

/// Layout of [`h_graph`]'s vertices.
#[derive(Clone, Debug)]
pub struct HGraphLayout {
    pub graph: Graph,
    /// The `k + s` terminal vertices (`0..k` from `K_k`, then `k..k+s`).
    pub terminals: Vec<usize>,
    /// Middle subdivision vertices, pairwise adjacent.
    pub middle: VertexSet,
}

/// Join of `K_k` and `K_s`, every edge except those inside `K_s` subdivided
/// `d - 1` times, with the middle subdivision vertices made a clique.
///
/// Numbering: `K_k` on `0..k`, `K_s` on `k..k+s`, then the `d - 1` interior
/// vertices of each `K_k` edge `(a, b)`, `a < b`, in lexicographic order,
/// then those of each cross edge `(a, c)` with `a` in `K_k`. Interior vertices
/// run from the `K_k` end.
pub fn h_graph(k: usize, s: usize, d: usize) -> Result<HGraphLayout> {
    if k == 0 || d < 2 {
        return Err(Error::invalid("H(k,s,d) needs k >= 1 and d >= 2"));
    }
    let long_edges: Vec<(usize, usize)> = all_pairs(0..k)
        .chain((0..k).flat_map(|a| (k..k + s).map(move |c| (a, c))))
        .collect();
    let mut edges: Vec<(usize, usize)> = all_pairs(k..k + s).collect();
    let mut next = k + s;
    let mut middle = Vec::new();
    let (lo, hi) = (d / 2, d.div_ceil(2));
    for &(a, b) in &long_edges {
        let interior: Vec<usize> = (next..next + d - 1).collect();
        next += d - 1;
        let mut chain = vec![a];
        chain.extend(&interior);
        chain.push(b);
        edges.extend(chain.windows(2).map(|w| (w[0], w[1])));
        for pos in lo..=hi {
            middle.push(interior[pos - 1]);
        }
    }
    middle.sort_unstable();
    middle.dedup();
    edges.extend(all_pairs_of(&middle));
    let graph = Graph::from_edge_soup(next, edges)?;
    Ok(HGraphLayout {
        middle: VertexSet::from_vertices(next, middle.iter().copied()),
        terminals: (0..k + s).collect(),
        graph,
    })
}

/// Replaces every leaf of `tree` by a clique of the given order, each clique
/// vertex joined to the leaf's support vertex. Leaves are taken in ascending
/// index order; leaf `l_i` keeps its index as the first vertex of its clique
/// and the other clique vertices are appended. A two-vertex tree yields
/// `K_{n_1 + n_2}`.
pub fn clique_tree(tree: &Graph, sizes: &[usize]) -> Result<Graph> {
    if !tree.is_tree() || tree.order() < 2 {
        return Err(Error::invalid(
            "clique tree needs a tree with at least two vertices",
        ));
    }
    let leaves = tree.leaves();
    if sizes.len() != leaves.len() {
        return Err(Error::invalid(format!(
            "tree has {} leaves but {} sizes were given",
            leaves.len(),
            sizes.len()
        )));
    }
    if sizes.contains(&0) {
        return Err(Error::invalid("clique sizes must be positive"));
    }
    if tree.order() == 2 {
        return complete(sizes[0] + sizes[1]);
    }
    let mut edges: Vec<(usize, usize)> = tree.edges().to_vec();
    let mut next = tree.order();
    for (&leaf, &size) in leaves.iter().zip(sizes) {
        let support = tree.neighbors(leaf)[0];
        let mut clique = vec![leaf];
        clique.extend(next..next + size - 1);
        next += size - 1;
        edges.extend(clique.iter().map(|&c| (support, c)));
        edges.extend(all_pairs_of(&clique));
    }
    Graph::from_edge_soup(next, edges)
}

/// `K_k` with every edge replaced by `n` internally disjoint paths of length
/// two, plus a universal vertex.
///
/// Numbering: `x_1..x_k` on `0..k`, then `x_{ij}^{(l)}` for `i < j` in
/// lexicographic order and `l = 1..n`, then the universal vertex last.
pub fn counterexample_graph(k: usize, n: usize) -> Result<Graph> {
    if k < 2 || n == 0 {
        return Err(Error::invalid("cex(k,n) needs k >= 2 and n >= 1"));
    }
    let mut edges = Vec::new();
    let mut next = k;
    for (i, j) in all_pairs(0..k) {
        for _ in 0..n {
            edges.push((i, next));
            edges.push((j, next));
            next += 1;
        }
    }
    let u = next;
    edges.extend((0..u).map(|v| (v, u)));
    Graph::new(u + 1, edges)
}

/// Index of `x_{ij}^{(l)}` (0-based `i < j`, 1-based `l`) in [`counterexample_graph`].
pub fn counterexample_middle_index(k: usize, n: usize, i: usize, j: usize, l: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    let rank = all_pairs(0..k)
        .position(|p| p == (i, j))
        .expect("i != j < k");
    k + rank * n + (l - 1)
}

/// Higher-diameter variant: `K_k` with every edge replaced by `n` disjoint
/// paths of length `2p`, plus a star `K_{1,k}` whose edges become paths of
/// length `p - 1`; star leaf `i` is joined to original vertex `i` and the star
/// center to every middle vertex.
///
/// Numbering: originals `0..k`; for each edge `i < j` and each copy, the
/// `2p - 1` interior vertices from the `i` end; the star center; then for each
/// `i` the `p - 1` vertices of the star path from the center outwards.
pub fn counterexample_highdiam(k: usize, n: usize, p: usize) -> Result<Graph> {
    if k < 2 || n == 0 || p < 2 {
        return Err(Error::invalid(
            "cexd(k,n,p) needs k >= 2, n >= 1 and p >= 2",
        ));
    }
    let mut edges = Vec::new();
    let mut next = k;
    let mut middles = Vec::new();
    for (i, j) in all_pairs(0..k) {
        for _ in 0..n {
            let mut chain = vec![i];
            chain.extend(next..next + 2 * p - 1);
            chain.push(j);
            middles.push(next + p - 1);
            next += 2 * p - 1;
            edges.extend(chain.windows(2).map(|w| (w[0], w[1])));
        }
    }
    let center = next;
    next += 1;
    edges.extend(middles.iter().map(|&m| (center, m)));
    for i in 0..k {
        let mut chain = vec![center];
        chain.extend(next..next + p - 1);
        next += p - 1;
        chain.push(i);
        edges.extend(chain.windows(2).map(|w| (w[0], w[1])));
    }
    Graph::new(next, edges)
}

/// Vertex layout of `G □ H`: `(g, h)` lives at index `g * n(H) + h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductVertexMap {
    pub left_order: usize,
    pub right_order: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    Left,
    Right,
}

impl ProductVertexMap {
    pub fn order(&self) -> usize {
        self.left_order * self.right_order
    }

    pub fn index(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.left_order && h < self.right_order);
        g * self.right_order + h
    }

    pub fn pair(&self, v: usize) -> (usize, usize) {
        (v / self.right_order, v % self.right_order)
    }

    pub fn coordinate(&self, v: usize, factor: Factor) -> usize {
        let (g, h) = self.pair(v);
        match factor {
            Factor::Left => g,
            Factor::Right => h,
        }
    }

    pub fn factor_order(&self, factor: Factor) -> usize {
        match factor {
            Factor::Left => self.left_order,
            Factor::Right => self.right_order,
        }
    }

    pub fn project_set(&self, set: &VertexSet, factor: Factor) -> VertexSet {
        VertexSet::from_vertices(
            self.factor_order(factor),
            set.iter().map(|v| self.coordinate(v, factor)),
        )
    }

    /// Coordinate sequence with consecutive repeats collapsed.
    pub fn project_path(&self, path: &Path, factor: Factor) -> Path {
        let mut seq: Vec<usize> = path.0.iter().map(|&v| self.coordinate(v, factor)).collect();
        seq.dedup();
        Path(seq)
    }

    /// Vertices of the layer through `(fixed, *)` (left fixed) or `(*, fixed)`.
    pub fn layer(&self, fixed: usize, fixed_factor: Factor) -> Vec<usize> {
        match fixed_factor {
            Factor::Left => (0..self.right_order)
                .map(|h| self.index(fixed, h))
                .collect(),
            Factor::Right => (0..self.left_order).map(|g| self.index(g, fixed)).collect(),
        }
    }
}

pub fn cartesian_product(left: &Graph, right: &Graph) -> Result<(Graph, ProductVertexMap)> {
    let map = ProductVertexMap {
        left_order: left.order(),
        right_order: right.order(),
    };
    let mut edges = Vec::with_capacity(left.order() * right.size() + right.order() * left.size());
    for g in 0..left.order() {
        for &(a, b) in right.edges() {
            edges.push((map.index(g, a), map.index(g, b)));
        }
    }
    for h in 0..right.order() {
        for &(a, b) in left.edges() {
            edges.push((map.index(a, h), map.index(b, h)));
        }
    }
    Ok((Graph::new(map.order(), edges)?, map))
}

/// Uniform labelled tree on `n` vertices via a random Prüfer sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    match n {
        0 => return Err(Error::invalid("tree needs n >= 1")),
        1 => return Graph::new(1, []),
        2 => return Graph::new(2, [(0, 1)]),
        _ => {}
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    tree_from_edges(n, &edges)
}

fn all_pairs(range: std::ops::Range<usize>) -> impl Iterator<Item = (usize, usize)> + Clone {
    let end = range.end;
    range.flat_map(move |u| (u + 1..end).map(move |v| (u, v)))
}

fn all_pairs_of(vs: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            out.push((a, b));
        }
    }
    out
}

/// A family member named by the textual grammar
///
/// ```text
/// spec  := atom | name '(' args ')'
/// atom  := 'K' n | 'P' n | 'C' n          complete, path, cycle
/// name  := path | cycle | complete | K (multipartite, >= 2 args) | star
///        | cocktail | split | sub | hat | H | tree | cliquetree
///        | cex | cexd | product
/// ```
///
/// Examples: `K4`, `K(7,11)`, `cocktail(6)`, `split(3,3)`, `hat(K4)`,
/// `H(3,2,4)`, `tree(0-1,1-2,1-3)`, `cliquetree(tree(0-1,1-2),2,2)`,
/// `cex(4,2)`, `cexd(4,2,2)`, `product(P4,P3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Multipartite(Vec<usize>),
    Star(usize),
    Tree(usize, Vec<(usize, usize)>),
    Cocktail(usize),
    Split(usize, usize),
    Subdivision(Box<FamilySpec>),
    Hat(Box<FamilySpec>),
    HGraph(usize, usize, usize),
    CliqueTree(Box<FamilySpec>, Vec<usize>),
    Counterexample(usize, usize),
    CounterexampleHighDiam(usize, usize, usize),
    Product(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = SpecParser {
            src: text.as_bytes(),
            pos: 0,
        };
        p.skip_ws();
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<Graph> {
        use FamilySpec::*;
        match self {
            Path(n) => path(*n),
            Cycle(n) => cycle(*n),
            Complete(n) => complete(*n),
            Multipartite(parts) => complete_multipartite(parts),
            Star(k) => star(*k),
            Tree(n, edges) => tree_from_edges(*n, edges),
            Cocktail(n) => cocktail_party(*n),
            Split(m, n) => split_graph(*m, *n),
            Subdivision(inner) => subdivision(&inner.build()?),
            Hat(inner) => hat_subdivision(&inner.build()?),
            HGraph(k, s, d) => Ok(h_graph(*k, *s, *d)?.graph),
            CliqueTree(tree, sizes) => clique_tree(&tree.build()?, sizes),
            Counterexample(k, n) => counterexample_graph(*k, *n),
            CounterexampleHighDiam(k, n, p) => counterexample_highdiam(*k, *n, *p),
            Product(a, b) => Ok(cartesian_product(&a.build()?, &b.build()?)?.0),
        }
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use FamilySpec::*;
        let list = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Path(n) => write!(f, "P{n}"),
            Cycle(n) => write!(f, "C{n}"),
            Complete(n) => write!(f, "K{n}"),
            Multipartite(parts) => write!(f, "K({})", list(parts)),
            Star(k) => write!(f, "star({k})"),
            Tree(_, edges) => {
                let e: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                write!(f, "tree({})", e.join(","))
            }
            Cocktail(n) => write!(f, "cocktail({n})"),
            Split(m, n) => write!(f, "split({m},{n})"),
            Subdivision(g) => write!(f, "sub({g})"),
            Hat(g) => write!(f, "hat({g})"),
            HGraph(k, s, d) => write!(f, "H({k},{s},{d})"),
            CliqueTree(t, sizes) => write!(f, "cliquetree({t},{})", list(sizes)),
            Counterexample(k, n) => write!(f, "cex({k},{n})"),
            CounterexampleHighDiam(k, n, p) => write!(f, "cexd({k},{n},{p})"),
            Product(a, b) => write!(f, "product({a},{b})"),
        }
    }
}

struct SpecParser<'a> {
    src: &'a [u8],
    pos: usize,
}

enum Arg {
    Num(usize),
    Edge(usize, usize),
    Spec(FamilySpec),
}

impl SpecParser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::parse_at_byte(self.pos, message)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::parse_at_byte(start, "number too large"))
    }

    fn arg(&mut self) -> Result<Arg> {
        self.skip_ws();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let a = self.number()?;
            if self.eat(b'-') {
                return Ok(Arg::Edge(a, self.number()?));
            }
            return Ok(Arg::Num(a));
        }
        Ok(Arg::Spec(self.spec()?))
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        self.skip_ws();
        let start = self.pos;
        let name = self.ident();
        if name.is_empty() {
            return Err(self.error("expected a family name"));
        }
        if !self.eat(b'(') {
            // Shorthand atoms: K4, P3, C6.
            let n = self
                .number()
                .map_err(|_| Error::parse_at_byte(start, format!("unknown family `{name}`")))?;
            return match name.as_str() {
                "K" => Ok(FamilySpec::Complete(n)),
                "P" => Ok(FamilySpec::Path(n)),
                "C" => Ok(FamilySpec::Cycle(n)),
                _ => Err(Error::parse_at_byte(
                    start,
                    format!("unknown family `{name}`"),
                )),
            };
        }
        let mut args = Vec::new();
        if !self.eat(b')') {
            loop {
                args.push(self.arg()?);
                if self.eat(b')') {
                    break;
                }
                if !self.eat(b',') {
                    return Err(self.error("expected `,` or `)`"));
                }
            }
        }
        let bad = |what: &str| Error::parse_at_byte(start, format!("`{name}` expects {what}"));
        let nums = |args: &[Arg]| -> Option<Vec<usize>> {
            args.iter()
                .map(|a| match a {
                    Arg::Num(x) => Some(*x),
                    _ => None,
                })
                .collect()
        };
        let spec_arg = |a: &Arg| match a {
            Arg::Spec(s) => Some(s.clone()),
            _ => None,
        };
        use FamilySpec::*;
        let fixed = |want: usize| -> Option<Vec<usize>> { nums(&args).filter(|v| v.len() == want) };
        Ok(match name.as_str() {
            "path" => Path(fixed(1).ok_or_else(|| bad("one number"))?[0]),
            "cycle" => Cycle(fixed(1).ok_or_else(|| bad("one number"))?[0]),
            "complete" => Complete(fixed(1).ok_or_else(|| bad("one number"))?[0]),
            "star" => Star(fixed(1).ok_or_else(|| bad("one number"))?[0]),
            "cocktail" => Cocktail(fixed(1).ok_or_else(|| bad("one number"))?[0]),
            "K" | "multipartite" => {
                let parts = nums(&args)
                    .filter(|v| v.len() >= 2)
                    .ok_or_else(|| bad("two or more part sizes"))?;
                Multipartite(parts)
            }
            "split" => {
                let v = fixed(2).ok_or_else(|| bad("two numbers"))?;
                Split(v[0], v[1])
            }
            "H" => {
                let v = fixed(3).ok_or_else(|| bad("three numbers"))?;
                HGraph(v[0], v[1], v[2])
            }
            "cex" => {
                let v = fixed(2).ok_or_else(|| bad("two numbers"))?;
                Counterexample(v[0], v[1])
            }
            "cexd" => {
                let v = fixed(3).ok_or_else(|| bad("three numbers"))?;
                CounterexampleHighDiam(v[0], v[1], v[2])
            }
            "sub" | "hat" => {
                let inner = (args.len() == 1)
                    .then(|| spec_arg(&args[0]))
                    .flatten()
                    .ok_or_else(|| bad("one graph"))?;
                if name == "sub" {
                    Subdivision(Box::new(inner))
                } else {
                    Hat(Box::new(inner))
                }
            }
            "product" => {
                let parts: Option<Vec<FamilySpec>> = args.iter().map(spec_arg).collect();
                match parts {
                    Some(v) if v.len() == 2 => {
                        Product(Box::new(v[0].clone()), Box::new(v[1].clone()))
                    }
                    _ => return Err(bad("two graphs")),
                }
            }
            "tree" => {
                let edges: Option<Vec<(usize, usize)>> = args
                    .iter()
                    .map(|a| match a {
                        Arg::Edge(u, v) => Some((*u, *v)),
                        _ => None,
                    })
                    .collect();
                let edges = edges
                    .filter(|e| !e.is_empty())
                    .ok_or_else(|| bad("edges like 0-1"))?;
                let n = edges.len() + 1;
                Tree(n, edges)
            }
            "cliquetree" => {
                let tree = args
                    .first()
                    .and_then(spec_arg)
                    .ok_or_else(|| bad("a tree then sizes"))?;
                let sizes = nums(&args[1..])
                    .filter(|v| !v.is_empty())
                    .ok_or_else(|| bad("a tree then sizes"))?;
                CliqueTree(Box::new(tree), sizes)
            }
            _ => {
                return Err(Error::parse_at_byte(
                    start,
                    format!("unknown family `{name}`"),
                ))
            }
        })
    }
}

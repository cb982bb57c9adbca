use super::EdgeColoring;
use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// Partial colouring with, per vertex, the neighbour reached by each colour.
struct State {
    at: Vec<Vec<usize>>,
}

impl State {
    fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        self.at[u].iter().position(|&w| w == v)
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v][c] == NONE
    }

    fn free_color(&self, v: usize) -> usize {
        self.at[v].iter().position(|&w| w == NONE).expect("Δ+1 colours leave one free")
    }

    fn uncolor(&mut self, u: usize, v: usize) {
        if let Some(c) = self.color_of(u, v) {
            self.at[u][c] = NONE;
            self.at[v][c] = NONE;
        }
    }

    fn paint(&mut self, u: usize, v: usize, c: usize) {
        self.uncolor(u, v);
        debug_assert!(self.is_free(u, c) && self.is_free(v, c));
        self.at[u][c] = v;
        self.at[v][c] = u;
    }
}

/// Colours the edges with at most `Δ+1` colours using the fan-rotation and
/// alternating-path recolouring of Misra and Gries.
pub fn vizing_color(g: &Graph) -> EdgeColoring {
    let palette = g.max_degree() + 1;
    let mut st = State { at: vec![vec![NONE; palette]; g.n()] };

    for &(u, v) in g.edges() {
        // Maximal fan at u starting with v.
        let mut fan = vec![v];
        let mut in_fan = vec![false; g.n()];
        in_fan[v] = true;
        loop {
            let last = *fan.last().unwrap();
            let next = g.neighbors(u).iter().copied().find(|&w| {
                !in_fan[w] && st.color_of(u, w).is_some_and(|c| st.is_free(last, c))
            });
            match next {
                Some(w) => {
                    in_fan[w] = true;
                    fan.push(w);
                }
                None => break,
            }
        }

        let c = st.free_color(u);
        let d = st.free_color(*fan.last().unwrap());

        // Swap c and d along the alternating path leaving u through colour d.
        let mut path = Vec::new();
        let (mut x, mut want) = (u, d);
        while st.at[x][want] != NONE {
            let y = st.at[x][want];
            path.push((x, y, want));
            x = y;
            want = if want == d { c } else { d };
        }
        for &(a, b, _) in &path {
            st.uncolor(a, b);
        }
        for &(a, b, col) in &path {
            st.paint(a, b, if col == d { c } else { d });
        }

        let w = fan.iter().position(|&f| st.is_free(f, d)).expect("some fan vertex misses d");
        for i in 0..w {
            let next_color = st.color_of(u, fan[i + 1]).expect("fan edges are coloured");
            st.uncolor(u, fan[i + 1]);
            st.paint(u, fan[i], next_color);
        }
        st.paint(u, fan[w], d);
    }

    let mut col = EdgeColoring::new();
    for &(u, v) in g.edges() {
        col.set(u, v, st.color_of(u, v).expect("every edge coloured"));
    }
    col
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::validate_coloring;
    use crate::constructions::random_gnp;
    use crate::Rational;
    use crate::graph::{complete_graph, cycle, petersen, star};
    use proptest::prelude::*;

    fn check(g: &Graph) {
        let col = vizing_color(g);
        assert_eq!(validate_coloring(g, &col), Ok(true));
        assert!(col.palette_size() <= g.max_degree() + 1);
    }

    #[test]
    fn named_graphs() {
        for g in [petersen(), cycle(6), cycle(5), complete_graph(7), complete_graph(8), star(6)] {
            check(&g);
        }
        check(&Graph::empty(3));
    }

    #[test]
    fn sparse_random_graph_is_fast() {
        let g = random_gnp(60, Rational::new(1, 10), 7).unwrap();
        let start = std::time::Instant::now();
        check(&g);
        assert!(start.elapsed().as_secs_f64() < 1.0);
    }

    proptest! {
        #[test]
        fn proper_with_delta_plus_one(n in 1usize..25, num in 1i64..10, seed in any::<u64>()) {
            let g = random_gnp(n, Rational::new(num, 10), seed).unwrap();
            let col = vizing_color(&g);
            prop_assert_eq!(validate_coloring(&g, &col), Ok(true));
            prop_assert!(col.palette_size() <= g.max_degree() + 1);
        }
    }
}

use midlevels::{build_mk, build_mk_pi, build_rk, Budget, ColoredGraph, NecklaceClass, Word};

use crate::color::color_at;
use crate::LexicalError;

/// M_k with every edge colored from its lower endpoint.
pub fn one_factorization(k: usize, budget: &Budget) -> Result<ColoredGraph<Word>, LexicalError> {
    let mut g = build_mk(k, budget)?;
    let vertices = g.vertices().to_vec();
    for e in g.edges_mut() {
        e.color = Some(color_at(vertices[e.a], e.position)?);
    }
    Ok(g)
}

fn color_classes(g: &mut ColoredGraph<NecklaceClass>) -> Result<(), LexicalError> {
    let vertices = g.vertices().to_vec();
    for e in g.edges_mut() {
        e.color = Some(color_at(vertices[e.a].canonical(), e.position)?);
    }
    Ok(())
}

/// The rotation quotient with its induced coloring.
pub fn colored_mk_pi(k: usize, budget: &Budget) -> Result<ColoredGraph<NecklaceClass>, LexicalError> {
    let mut g = build_mk_pi(k, budget)?;
    color_classes(&mut g)?;
    Ok(g)
}

/// R_k with its induced coloring; loops keep the color of their horizontal
/// edge.
pub fn colored_rk(k: usize, budget: &Budget) -> Result<ColoredGraph<NecklaceClass>, LexicalError> {
    let mut g = build_rk(k, budget)?;
    color_classes(&mut g)?;
    Ok(g)
}

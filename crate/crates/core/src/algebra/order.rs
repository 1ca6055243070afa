use core::cmp::Ordering;

use super::monomial::Monomial;

/// Monomial order descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[derive(Default)]
pub enum TermOrder {
    /// Graded reverse lexicographic, `x0 > x1 > ...`. The default.
    #[default]
    Grevlex,
    /// Graded lexicographic.
    Grlex,
    /// Pure lexicographic.
    Lex,
    /// Elimination order: grevlex on the first `split` variables, ties broken
    /// by grevlex on the remaining ones.
    Block { split: usize },
}


fn revlex_tail(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            // smaller exponent in the last differing variable is larger
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn grevlex_range(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| u32::from(e)).sum();
    let db: u32 = b.iter().map(|&e| u32::from(e)).sum();
    da.cmp(&db).then_with(|| revlex_tail(a, b))
}

impl TermOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial, nvars: usize) -> Ordering {
        let (ea, eb) = (&a.raw()[..nvars], &b.raw()[..nvars]);
        match self {
            TermOrder::Grevlex => a
                .total_degree()
                .cmp(&b.total_degree())
                .then_with(|| revlex_tail(ea, eb)),
            TermOrder::Grlex => a.total_degree().cmp(&b.total_degree()).then_with(|| ea.cmp(eb)),
            TermOrder::Lex => ea.cmp(eb),
            TermOrder::Block { split } => {
                let s = (*split).min(nvars);
                grevlex_range(&ea[..s], &eb[..s]).then_with(|| grevlex_range(&ea[s..], &eb[s..]))
            }
        }
    }

    /// Whether the order refines total degree.
    pub fn is_graded(&self) -> bool {
        matches!(self, TermOrder::Grevlex | TermOrder::Grlex)
    }
}

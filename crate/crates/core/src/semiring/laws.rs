use super::Semiring;
use crate::error::Capability;

/// Checks the semiring axioms on one triple and names the first law that fails.
///
/// Laws built from `⊕` alone are compared exactly when `⊕` is idempotent;
/// anything involving `⊙`, and `⊕` in non-idempotent instances, is compared
/// with [`Semiring::approx_eq`] at `rel_tol`. Identities and absorption are
/// always exact.
pub fn check_axioms<S: Semiring>(a: S::Elem, b: S::Elem, c: S::Elem, rel_tol: f64) -> Result<(), String> {
    let idem = S::FLAGS.has(Capability::Idempotent);
    let exact = |x: S::Elem, y: S::Elem| x == y;
    let close = |x: S::Elem, y: S::Elem| S::approx_eq(x, y, rel_tol);
    let add_eq = |x, y| if idem { exact(x, y) } else { close(x, y) };
    let (add, mul, zero, one) = (S::add, S::mul, S::zero(), S::one());

    let laws: [(&str, bool); 11] = [
        ("associativity of ⊕", add_eq(add(add(a, b), c), add(a, add(b, c)))),
        ("commutativity of ⊕", exact(add(a, b), add(b, a))),
        ("associativity of ⊙", close(mul(mul(a, b), c), mul(a, mul(b, c)))),
        ("left distributivity", close(mul(a, add(b, c)), add(mul(a, b), mul(a, c)))),
        ("right distributivity", close(mul(add(a, b), c), add(mul(a, c), mul(b, c)))),
        ("additive identity", exact(add(a, zero), a) && exact(add(zero, a), a)),
        ("multiplicative identity", exact(mul(a, one), a) && exact(mul(one, a), a)),
        ("absorption by zero", exact(mul(a, zero), zero) && exact(mul(zero, a), zero)),
        ("idempotency of ⊕", !idem || exact(add(a, a), a)),
        ("closure of ⊕", S::contains(&add(a, b))),
        ("closure of ⊙", S::contains(&mul(a, b))),
    ];
    match laws.iter().find(|(_, holds)| !holds) {
        None => Ok(()),
        Some((name, _)) => Err(format!(
            "{name} fails in {} at a = {}, b = {}, c = {}",
            S::id(),
            S::format_elem(&a),
            S::format_elem(&b),
            S::format_elem(&c)
        )),
    }
}

use super::{second_solution, GroupLabel, Hyperexponential};
use crate::exactnum::RadNum;
use crate::polyrat::{Poly, RatFunc};
use crate::Result;

/// Group label from the distinct case-1 solutions `ξ = P·exp(∫ω)` found.
///
/// Two independent hyperexponential solutions give a diagonal group: trivial
/// when both are rational, cyclic (reported as `G_k`) when algebraic, `C*`
/// otherwise. A single solution is classified by its algebraic order and, for
/// rational `ξ`, by the logarithm in `ξ∫dx/ξ²`.
pub(crate) fn classify_solutions(xis: &[Hyperexponential]) -> Result<GroupLabel> {
    if xis.len() >= 2 {
        let orders: Option<Vec<u64>> = xis.iter().map(|x| x.algebraic_order()).collect();
        return Ok(match orders {
            Some(ks) => {
                let k = ks.into_iter().fold(1u64, num_integer::lcm);
                if k == 1 {
                    GroupLabel::IdentityE
                } else {
                    GroupLabel::FiniteBorelGk(k)
                }
            }
            None => GroupLabel::TorusCstar,
        });
    }
    let xi = &xis[0];
    Ok(match xi.algebraic_order() {
        Some(1) => match second_solution(xi)?.log_free {
            Some(true) => GroupLabel::IdentityE,
            _ => GroupLabel::AdditiveCplus,
        },
        Some(k) => GroupLabel::FiniteBorelGk(k),
        None => GroupLabel::BorelCstarSemidirectCplus,
    })
}

/// Label for a single case-1 solution `P·exp(∫ω)`.
pub fn classify_case1_group(omega: &RatFunc<RadNum>, p: &Poly<RadNum>) -> Result<GroupLabel> {
    classify_solutions(&[Hyperexponential::from_omega(p, omega)?])
}

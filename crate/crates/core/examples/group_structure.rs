//! Structural predicates of the built-in groups: normal subgroups,
//! commutator subgroups, Sylow subgroups and p-nilpotency.
//!
//! `cargo run --example group_structure`

use twisted_codes::groups::{FiniteGroup, PNilpotency};
use twisted_codes::Result;

fn main() -> Result<()> {
    for name in ["S3", "A4", "D4", "Q8", "C2xC2", "S4"] {
        let g = FiniteGroup::builtin(name)?;
        let normal: Vec<usize> = g.normal_subgroups().iter().map(|h| h.order()).collect();
        println!(
            "{name}: order {}, abelian {}, commutator subgroup of order {}, normal subgroup orders {normal:?}",
            g.order(),
            g.is_abelian(),
            g.commutator_subgroup().order(),
        );
        for p in [2, 3] {
            let sylow = g.sylow_subgroup(p);
            let nil = match g.p_nilpotency(p) {
                PNilpotency::Complement(k) => format!("p-nilpotent, normal p-complement of order {}", k.order()),
                PNilpotency::Violation(a, b) => format!("not p-nilpotent ({a}·{b} leaves the p'-elements)"),
            };
            println!(
                "  p = {p}: Sylow of order {}, cyclic {}, {nil}",
                sylow.order(),
                g.has_cyclic_sylow(p)
            );
        }
    }
    Ok(())
}

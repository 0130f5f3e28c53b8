//! Ground three programs and classify their dependency graphs.

use credal_plp::ground::{classify, dependency_graph, ground};
use credal_plp::syntax::parse_program;

fn main() {
    let programs = [
        ("alarm", include_str!("../fixtures/alarm.plp")),
        ("smokers", include_str!("../fixtures/smokers.plp")),
        ("wins", include_str!("../fixtures/wins.plp")),
    ];
    for (name, source) in programs {
        let g = ground(&parse_program(source).unwrap().program).unwrap();
        let class = classify(&dependency_graph(&g));
        println!("{name}: {} atoms, {} rules, {}", g.atom_count(), g.rules().len(), class.kind);
        if let Some(cycle) = class.witness {
            let names: Vec<String> = cycle.iter().map(|a| g.atom(*a).to_string()).collect();
            println!("  cycle: {}", names.join(" -> "));
        }
        for rule in g.rules().iter().take(3) {
            println!("  {}", g.rule_text(rule));
        }
    }
}

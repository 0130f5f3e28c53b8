//! Three-valued distributions under the well-founded semantics.

use credal_plp::ground::ground;
use credal_plp::infer::{wf_distribution, wf_query, Limits};
use credal_plp::prob::format_literal;
use credal_plp::syntax::{parse_program, parse_query, Assignments};

fn main() {
    let limits = Limits::default();
    let g = ground(&parse_program(include_str!("../fixtures/cold.plp")).unwrap().program).unwrap();
    for atom in ["cold", "headache"] {
        let a = parse_query(atom).unwrap().0.remove(0).0;
        let d = wf_distribution(&g, &a, &limits).unwrap();
        println!(
            "{atom}: true {}, false {}, undefined {}",
            format_literal(&d.p_true),
            format_literal(&d.p_false),
            format_literal(&d.p_undefined)
        );
    }

    let g = ground(&parse_program(include_str!("../fixtures/barber.plp")).unwrap().program).unwrap();
    let q = parse_query("shaves(b,b)=undefined").unwrap();
    let p = wf_query(&g, &q, &Assignments::new(), &limits).unwrap().defined().unwrap();
    println!("P(shaves(b,b) undefined) = {}", format_literal(&p));
}

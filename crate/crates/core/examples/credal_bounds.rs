//! Lower and upper probabilities under the credal semantics, with and
//! without evidence.

use credal_plp::ground::ground;
use credal_plp::infer::{credal_conditional, credal_unconditional, Conditional, Limits};
use credal_plp::models::Event;
use credal_plp::prob::format_literal;
use credal_plp::syntax::{parse_program, parse_query};

fn main() {
    let limits = Limits::default();
    let g = ground(&parse_program(include_str!("../fixtures/coloring.plp")).unwrap().program).unwrap();
    for q in ["color(1,yellow)", "color(4,yellow)", "color(3,red)"] {
        let event = Event::from_assignments(&g, &parse_query(q).unwrap()).unwrap();
        let iv = credal_unconditional(&g, &event, &limits).unwrap();
        println!("P({q}) in [{}, {}]", format_literal(&iv.lower), format_literal(&iv.upper));
    }

    let g = ground(&parse_program(include_str!("../fixtures/basic.plp")).unwrap().program).unwrap();
    let q = Event::from_assignments(&g, &parse_query("q").unwrap()).unwrap();
    let e = Event::from_assignments(&g, &parse_query("r=false").unwrap()).unwrap();
    match credal_conditional(&g, &q, &e, &limits).unwrap() {
        Conditional::Defined(iv) => {
            println!("P(q | not r) in [{}, {}]", format_literal(&iv.lower), format_literal(&iv.upper))
        }
        Conditional::Undefined => println!("P(q | not r) is undefined"),
    }
}

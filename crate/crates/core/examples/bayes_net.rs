//! Compile the alarm program to a Bayesian network and query it.

use credal_plp::compile::{bn_query, clark_completion, compile_bn, export_bn, CompileOptions};
use credal_plp::ground::ground;
use credal_plp::prob::format_literal;
use credal_plp::syntax::{parse_program, parse_query, Assignments};

fn main() {
    let g = ground(&parse_program(include_str!("../fixtures/alarm.plp")).unwrap().program).unwrap();
    print!("{}", clark_completion(&g).unwrap().render(&g));

    let bn = compile_bn(&g, &CompileOptions::default()).unwrap();
    println!("\n{} nodes", bn.nodes.len());
    let p = bn_query(&bn, &parse_query("calls(a)").unwrap(), &Assignments::new()).defined().unwrap();
    println!("P(calls(a)) = {}", format_literal(&p));
    let p = bn_query(&bn, &parse_query("burglary").unwrap(), &parse_query("calls(a)").unwrap()).defined().unwrap();
    println!("P(burglary | calls(a)) = {}\n", format_literal(&p));

    print!("{}", export_bn(&bn).lines().take(8).map(|l| format!("{l}\n")).collect::<String>());
}

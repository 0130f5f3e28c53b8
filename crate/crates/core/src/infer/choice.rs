use super::{InferError, Limits};
use crate::ground::GroundProgram;
use crate::prob::{self, Prob};

/// One keep/discard decision per choice point, with its exact weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalChoice {
    /// `kept[i]` refers to choice point `i`.
    pub kept: Vec<bool>,
    pub weight: Prob,
}

impl TotalChoice {
    /// Bit string in choice-point order, `1` for kept. Accepted back by
    /// [`TotalChoice::from_bits`].
    pub fn bits(&self) -> String {
        self.kept.iter().map(|k| if *k { '1' } else { '0' }).collect()
    }

    /// Builds the choice described by `bits` (as printed by [`TotalChoice::bits`]).
    pub fn from_bits(g: &GroundProgram, bits: &str) -> Result<TotalChoice, InferError> {
        let n = g.choice_points().len();
        let kept: Vec<bool> = bits
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(InferError::BadChoice(format!("`{bits}` is not a bit string"))),
            })
            .collect::<Result<_, _>>()?;
        if kept.len() != n {
            return Err(InferError::BadChoice(format!("expected {n} bits, got {}", kept.len())));
        }
        let weight = weight_of(g, &kept);
        Ok(TotalChoice { kept, weight })
    }

    /// `a discarded, b kept`, listing choice points in id order.
    pub fn render(&self, g: &GroundProgram) -> String {
        let parts: Vec<String> = g
            .choice_points()
            .iter()
            .zip(&self.kept)
            .map(|(cp, k)| format!("{} {}", g.atom(cp.atom), if *k { "kept" } else { "discarded" }))
            .collect();
        parts.join(", ")
    }
}

fn weight_of(g: &GroundProgram, kept: &[bool]) -> Prob {
    g.choice_points()
        .iter()
        .zip(kept)
        .fold(prob::one(), |w, (cp, k)| if *k { w * &cp.prob } else { w * (prob::one() - &cp.prob) })
}

/// All `2^n` total choices in binary-counting order: choice point `i` is bit
/// `i` of the running index, so the first choice discards everything.
pub struct TotalChoices<'a> {
    g: &'a GroundProgram,
    next: u64,
    end: u64,
}

impl Iterator for TotalChoices<'_> {
    type Item = TotalChoice;

    fn next(&mut self) -> Option<TotalChoice> {
        if self.next >= self.end {
            return None;
        }
        let index = self.next;
        self.next += 1;
        let kept: Vec<bool> = (0..self.g.choice_points().len()).map(|i| index >> i & 1 == 1).collect();
        let weight = weight_of(self.g, &kept);
        Some(TotalChoice { kept, weight })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

pub fn total_choices<'a>(g: &'a GroundProgram, limits: &Limits) -> Result<TotalChoices<'a>, InferError> {
    let n = g.choice_points().len();
    if n > limits.max_choices || n >= 64 {
        return Err(InferError::TooManyChoices { limit: limits.max_choices, choices: n });
    }
    Ok(TotalChoices { g, next: 0, end: 1u64 << n })
}

/// The normal program for one total choice: kept choice atoms become facts,
/// discarded ones are simply not asserted.
pub fn program_for_choice(g: &GroundProgram, t: &TotalChoice) -> GroundProgram {
    let kept = g.choice_points().iter().zip(&t.kept).filter(|(_, k)| **k).map(|(cp, _)| cp.atom);
    g.with_extra_facts(kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::ground;
    use crate::models::{least_model, stable_models};
    use crate::prob::ratio;
    use crate::syntax::{parse_program, Atom};

    fn g(text: &str) -> GroundProgram {
        ground(&parse_program(text).unwrap().program).unwrap()
    }

    #[test]
    fn independent_coins() {
        let gp = g(include_str!("../../fixtures/independence.plp"));
        let all: Vec<_> = total_choices(&gp, &Limits::default()).unwrap().collect();
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|t| t.weight == ratio(1, 4)));
        let keep_all = program_for_choice(&gp, &all[3]);
        let v = gp.lookup(&Atom::prop("v")).unwrap();
        assert!(least_model(&keep_all).unwrap().is_true(v));
    }

    #[test]
    fn duplicates_marginal() {
        let gp = g(include_str!("../../fixtures/duplicates.plp"));
        let r = gp.lookup(&Atom::prop("r")).unwrap();
        let mut total = prob::zero();
        let mut r_true = prob::zero();
        let mut count = 0;
        for t in total_choices(&gp, &Limits::default()).unwrap() {
            count += 1;
            total += &t.weight;
            if least_model(&program_for_choice(&gp, &t)).unwrap().is_true(r) {
                r_true += &t.weight;
            }
        }
        assert_eq!(count, 32);
        assert_eq!(total, prob::one());
        assert_eq!(r_true, ratio(4, 5));
    }

    #[test]
    fn keep_first_r_only() {
        let gp = g(include_str!("../../fixtures/duplicates.plp"));
        let t = TotalChoice::from_bits(&gp, "10000").unwrap();
        let models: Vec<_> = stable_models(&program_for_choice(&gp, &t)).collect();
        assert_eq!(models.len(), 1);
        let trues: Vec<_> = models[0].true_atoms().map(|a| gp.atom(a).to_string()).collect();
        assert_eq!(trues, ["r"]);
    }

    #[test]
    fn no_choice_points() {
        let gp = g("a.");
        let all: Vec<_> = total_choices(&gp, &Limits::default()).unwrap().collect();
        assert_eq!(all, vec![TotalChoice { kept: vec![], weight: prob::one() }]);
    }

    #[test]
    fn cap() {
        let gp = g(include_str!("../../fixtures/path.plp"));
        let limits = Limits { max_choices: 6 };
        assert!(matches!(total_choices(&gp, &limits), Err(InferError::TooManyChoices { limit: 6, choices: 7 })));
    }

    #[test]
    fn bits_round_trip() {
        let gp = g(include_str!("../../fixtures/cold.plp"));
        let t = TotalChoice::from_bits(&gp, "01").unwrap();
        assert_eq!(t.bits(), "01");
        assert_eq!(t.render(&gp), "a discarded, b kept");
        assert_eq!(t.weight, ratio(66, 100) * ratio(1, 4));
        assert!(TotalChoice::from_bits(&gp, "0").is_err());
        assert!(TotalChoice::from_bits(&gp, "0x").is_err());
    }
}

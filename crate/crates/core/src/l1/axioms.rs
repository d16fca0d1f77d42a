use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::formula::{L1Formula, NameVar};
use crate::l1::taut::is_tautology_instance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AxiomSchema {
    /// `eps(a,b) -> eps(a,a)`
    Ax1,
    /// `eps(a,b) & eps(b,c) -> eps(a,c)`
    Ax2,
    /// `eps(a,b) & eps(b,c) -> eps(b,a)`
    Ax3,
    /// Substitution instance of a classical tautology.
    CPTaut,
}

impl AxiomSchema {
    pub const EPSILON_SCHEMATA: [AxiomSchema; 3] = [AxiomSchema::Ax1, AxiomSchema::Ax2, AxiomSchema::Ax3];

    /// Schematic name variables, in binding order.
    pub fn schema_vars(self) -> &'static [&'static str] {
        match self {
            AxiomSchema::Ax1 => &["a", "b"],
            AxiomSchema::Ax2 | AxiomSchema::Ax3 => &["a", "b", "c"],
            AxiomSchema::CPTaut => &[],
        }
    }

    /// Instance of an epsilon schema; `None` for `CPTaut` or when the
    /// substitution does not bind exactly the schema variables.
    pub fn instantiate(self, subst: &Substitution) -> Option<L1Formula> {
        let vars = self.schema_vars();
        if vars.is_empty() || subst.len() != vars.len() || !vars.iter().all(|v| subst.contains_key(*v)) {
            return None;
        }
        let e = |x: &str, y: &str| L1Formula::eps(&subst[x], &subst[y]);
        Some(match self {
            AxiomSchema::Ax1 => L1Formula::implies(e("a", "b"), e("a", "a")),
            AxiomSchema::Ax2 => L1Formula::implies(L1Formula::and(e("a", "b"), e("b", "c")), e("a", "c")),
            AxiomSchema::Ax3 => L1Formula::implies(L1Formula::and(e("a", "b"), e("b", "c")), e("b", "a")),
            AxiomSchema::CPTaut => unreachable!(),
        })
    }

    /// All instances over the given names, in substitution order.
    pub fn instances(self, names: &[NameVar]) -> Vec<L1Formula> {
        let vars = self.schema_vars();
        let mut out = Vec::new();
        let mut idx = vec![0usize; vars.len()];
        if vars.is_empty() || names.is_empty() {
            return out;
        }
        loop {
            let subst = vars.iter().zip(&idx).map(|(v, &i)| (v.to_string(), names[i].clone())).collect();
            out.push(self.instantiate(&subst).expect("complete substitution"));
            let mut pos = vars.len();
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < names.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
}

impl fmt::Display for AxiomSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AxiomSchema::Ax1 => "Ax1",
            AxiomSchema::Ax2 => "Ax2",
            AxiomSchema::Ax3 => "Ax3",
            AxiomSchema::CPTaut => "CPTaut",
        };
        f.write_str(s)
    }
}

/// Schematic variable (`"a"`, `"b"`, `"c"`) to name variable.
pub type Substitution = BTreeMap<String, NameVar>;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct AxiomMatch {
    pub schema: AxiomSchema,
    pub subst: Substitution,
}

fn unify(template: &L1Formula, target: &L1Formula, subst: &mut Substitution) -> bool {
    match (template, target) {
        (L1Formula::Epsilon(x, y), L1Formula::Epsilon(u, v)) => {
            for (s, t) in [(x, u), (y, v)] {
                match subst.get(s.as_str()) {
                    Some(bound) if bound != t => return false,
                    Some(_) => {}
                    None => {
                        subst.insert(s.to_string(), t.clone());
                    }
                }
            }
            true
        }
        (L1Formula::Not(x), L1Formula::Not(u)) => unify(x, u, subst),
        (L1Formula::Or(x, y), L1Formula::Or(u, v)) => unify(x, u, subst) && unify(y, v, subst),
        _ => false,
    }
}

/// Every way `formula` is an axiom: each epsilon schema with its
/// substitution, plus `CPTaut` (empty substitution) when it is a
/// tautology instance.
pub fn match_axiom(formula: &L1Formula) -> Vec<AxiomMatch> {
    let mut out = Vec::new();
    for schema in AxiomSchema::EPSILON_SCHEMATA {
        let generic: Substitution = schema
            .schema_vars()
            .iter()
            .map(|v| (v.to_string(), NameVar::new(v).unwrap()))
            .collect();
        let template = schema.instantiate(&generic).unwrap();
        let mut subst = Substitution::new();
        if unify(&template, formula, &mut subst) {
            out.push(AxiomMatch { schema, subst });
        }
    }
    if is_tautology_instance(formula) {
        out.push(AxiomMatch {
            schema: AxiomSchema::CPTaut,
            subst: Substitution::new(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_l1;

    fn l1(s: &str) -> L1Formula {
        parse_l1(s).unwrap()
    }

    fn subst(pairs: &[(&str, &str)]) -> Substitution {
        pairs.iter().map(|(k, v)| (k.to_string(), NameVar::new(v).unwrap())).collect()
    }

    #[test]
    fn ax1_instance() {
        assert_eq!(
            match_axiom(&l1("eps(a,b) -> eps(a,a)")),
            vec![AxiomMatch {
                schema: AxiomSchema::Ax1,
                subst: subst(&[("a", "a"), ("b", "b")])
            }]
        );
    }

    #[test]
    fn degenerate_ax1_is_also_a_tautology() {
        let matches = match_axiom(&l1("eps(a,a) -> eps(a,a)"));
        assert!(matches.contains(&AxiomMatch {
            schema: AxiomSchema::Ax1,
            subst: subst(&[("a", "a"), ("b", "a")])
        }));
        assert!(matches.iter().any(|m| m.schema == AxiomSchema::CPTaut));
    }

    #[test]
    fn shape_mismatch() {
        assert!(match_axiom(&l1("eps(a,b) -> eps(b,b)")).is_empty());
    }

    #[test]
    fn ax2_and_ax3_with_renaming() {
        let m = match_axiom(&l1("eps(c,a) & eps(a,b) -> eps(c,b)"));
        assert_eq!(
            m,
            vec![AxiomMatch {
                schema: AxiomSchema::Ax2,
                subst: subst(&[("a", "c"), ("b", "a"), ("c", "b")])
            }]
        );
        let m = match_axiom(&l1("eps(c,a) & eps(a,b) -> eps(a,c)"));
        assert_eq!(m[0].schema, AxiomSchema::Ax3);
        // only Ax3 fits when the conclusion reverses the first atom
        let m = match_axiom(&l1("eps(a,b) & eps(b,b) -> eps(b,a)"));
        assert_eq!(m.len(), 1);
        let m = match_axiom(&l1("eps(a,a) & eps(a,a) -> eps(a,a)"));
        let schemata: Vec<_> = m.iter().map(|m| m.schema).collect();
        assert_eq!(schemata, vec![AxiomSchema::Ax2, AxiomSchema::Ax3, AxiomSchema::CPTaut]);
    }

    #[test]
    fn instance_counts() {
        let names: Vec<NameVar> = ["a", "b", "c"].iter().map(|s| NameVar::new(s).unwrap()).collect();
        assert_eq!(AxiomSchema::Ax1.instances(&names).len(), 9);
        assert_eq!(AxiomSchema::Ax2.instances(&names).len(), 27);
        assert_eq!(AxiomSchema::Ax3.instances(&names).len(), 27);
        assert!(AxiomSchema::CPTaut.instances(&names).is_empty());
    }

    #[test]
    fn partial_substitution_is_rejected() {
        assert_eq!(AxiomSchema::Ax2.instantiate(&subst(&[("a", "a"), ("b", "b")])), None);
        assert_eq!(AxiomSchema::Ax1.instantiate(&subst(&[("a", "a"), ("b", "b"), ("c", "c")])), None);
    }
}

//! Specialization of `x`, `y`, `q` from the command line.

use std::str::FromStr;

use qschroder::{Point, Poly, Rational, Substitution, Var};

/// A value for one variable: a rational number or `formal`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum Binding {
    #[default]
    Formal,
    Value(Rational),
}

impl FromStr for Binding {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("formal") {
            return Ok(Binding::Formal);
        }
        s.parse::<Rational>()
            .map(Binding::Value)
            .map_err(|_| format!("`{s}` is neither a rational number like -3/4 nor `formal`"))
    }
}

/// Bindings for all three variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bindings {
    pub x: Binding,
    pub y: Binding,
    pub q: Binding,
}

impl Bindings {
    fn get(&self, v: Var) -> &Binding {
        match v {
            Var::X => &self.x,
            Var::Y => &self.y,
            Var::Q => &self.q,
        }
    }

    pub fn is_formal(&self) -> bool {
        Var::ALL.iter().all(|&v| *self.get(v) == Binding::Formal)
    }

    /// Substitution replacing every bound variable by its value.
    pub fn substitution(&self) -> Substitution<Rational> {
        Var::ALL.iter().fold(Substitution::identity(), |s, &v| match self.get(v) {
            Binding::Value(r) => s.with(v, Poly::constant(r.clone())),
            Binding::Formal => s,
        })
    }

    /// A point, if every variable in `free` is bound. Variables outside
    /// `free` do not matter and are set to 1.
    pub fn point_for(&self, free: &[Var]) -> Option<Point<Rational>> {
        let value = |v: Var| match self.get(v) {
            Binding::Value(r) => Some(r.clone()),
            Binding::Formal if free.contains(&v) => None,
            Binding::Formal => Some(Rational::from_integer(1.into())),
        };
        Some(Point::new(value(Var::X)?, value(Var::Y)?, value(Var::Q)?))
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        if self.is_formal() {
            p.clone()
        } else {
            p.subst(&self.substitution())
        }
    }

    /// `{"x": "2", "y": "formal", ...}` style description for reports.
    pub fn describe(&self) -> Vec<(String, String)> {
        Var::ALL
            .iter()
            .map(|&v| {
                let shown = match self.get(v) {
                    Binding::Formal => "formal".to_string(),
                    Binding::Value(r) => r.to_string(),
                };
                (v.to_string(), shown)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_bindings() {
        assert_eq!("formal".parse::<Binding>().unwrap(), Binding::Formal);
        assert_eq!("-3/4".parse::<Binding>().unwrap(), Binding::Value(Rational::new((-3).into(), 4.into())));
        assert!("x+1".parse::<Binding>().is_err());
    }

    #[test]
    fn point_needs_free_vars_bound() {
        let b = Bindings { x: "2".parse().unwrap(), ..Default::default() };
        assert!(b.point_for(&[Var::X, Var::Y]).is_none());
        let pt = b.point_for(&[Var::X]).unwrap();
        assert_eq!(pt.x, Rational::from_integer(2.into()));
    }

    #[test]
    fn substitution_only_touches_bound_vars() {
        let b = Bindings { q: "1".parse().unwrap(), ..Default::default() };
        let p: Poly = "x*q + y*q^2".parse().unwrap();
        assert_eq!(b.apply(&p), "x + y".parse().unwrap());
    }
}

//! Finite windows of chain complexes with exact homology bookkeeping.

use crate::error::{Error, Result};
use crate::modrep::{Module, ModuleMap};

/// A window of a complex: terms in consecutive degrees with differentials
/// of degree -1. Homology is only defined away from the window edges,
/// where both neighboring differentials are visible.
pub struct Complex {
    lowest: i64,
    terms: Vec<Module>,
    /// maps[k] goes from terms[k+1] to terms[k].
    maps: Vec<ModuleMap>,
}

impl Complex {
    pub fn new(lowest: i64, terms: Vec<Module>, maps: Vec<ModuleMap>) -> Result<Complex> {
        if terms.is_empty() {
            return Err(Error::InvalidModule("complex window needs at least one term".into()));
        }
        if maps.len() + 1 != terms.len() {
            return Err(Error::InvalidModule(
                "complex window needs exactly one map between consecutive terms".into(),
            ));
        }
        for (k, f) in maps.iter().enumerate() {
            if f.source.dim() != terms[k + 1].dim() || f.target.dim() != terms[k].dim() {
                return Err(Error::InvalidModule(format!(
                    "differential {k} does not match its terms"
                )));
            }
        }
        Ok(Complex { lowest, terms, maps })
    }

    pub fn lowest_degree(&self) -> i64 {
        self.lowest
    }

    pub fn highest_degree(&self) -> i64 {
        self.lowest + self.terms.len() as i64 - 1
    }

    pub fn term_at(&self, d: i64) -> Option<&Module> {
        let idx = d.checked_sub(self.lowest)?;
        if idx < 0 {
            return None;
        }
        self.terms.get(idx as usize)
    }

    /// The differential leaving degree d (into degree d - 1).
    pub fn map_from(&self, d: i64) -> Option<&ModuleMap> {
        let idx = d.checked_sub(self.lowest)?;
        if idx <= 0 {
            return None;
        }
        self.maps.get(idx as usize - 1)
    }

    /// All consecutive compositions vanish.
    pub fn is_complex(&self) -> bool {
        for k in 0..self.maps.len().saturating_sub(1) {
            if !self.maps[k].matrix.matmul(&self.maps[k + 1].matrix).is_zero() {
                return false;
            }
        }
        true
    }

    /// Homology dimension at an interior degree; None at the edges.
    pub fn homology_dim(&self, d: i64) -> Option<usize> {
        if d <= self.lowest_degree() || d >= self.highest_degree() {
            return None;
        }
        let outgoing = self.map_from(d).unwrap();
        let incoming = self.map_from(d + 1).unwrap();
        let kernel = outgoing.source.dim() - outgoing.matrix.rank();
        Some(kernel - incoming.matrix.rank())
    }

    /// Exactness at every interior degree.
    pub fn interior_exact(&self) -> bool {
        (self.lowest_degree() + 1..self.highest_degree()).all(|d| self.homology_dim(d) == Some(0))
    }

    /// Every differential image lies inside the radical of its target.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|f| {
            f.target
                .radical_basis()
                .spans(&f.matrix.col_space_basis())
        })
    }

    pub fn terms(&self) -> &[Module] {
        &self.terms
    }

    pub fn maps(&self) -> &[ModuleMap] {
        &self.maps
    }
}

impl std::fmt::Debug for Complex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let dims: Vec<usize> = self.terms.iter().map(|t| t.dim()).collect();
        write!(f, "Complex(degrees {}..={}, dims {:?})", self.lowest, self.highest_degree(), dims)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::preset_algebra;
    use crate::complexes::resolution::Resolution;
    use crate::linalg::FieldSpec;
    use crate::modrep::Side;

    #[test]
    fn a_resolution_window_is_a_minimal_complex_with_interior_homology_zero() {
        let a = preset_algebra(FieldSpec::Prime(2), "kxy", None).unwrap();
        let s = Module::simple(&a, Side::Left, 0);
        let mut res = Resolution::new(&s);
        res.ensure(3);
        let terms: Vec<Module> = (0..=3).map(|k| res.term(k).module().clone()).collect();
        let maps: Vec<ModuleMap> = (1..=3).map(|k| res.map(k).concrete()).collect();
        let c = Complex::new(0, terms, maps).unwrap();
        assert!(c.is_complex());
        assert!(c.is_minimal());
        assert_eq!(c.homology_dim(1), Some(0));
        assert_eq!(c.homology_dim(2), Some(0));
        assert_eq!(c.homology_dim(0), None);
        assert_eq!(c.homology_dim(3), None);
        assert!(c.interior_exact());
        assert_eq!(c.term_at(2).unwrap().dim(), res.term(2).dim());
        assert!(c.term_at(4).is_none());
        assert!(c.map_from(0).is_none());
    }

    #[test]
    fn homology_detects_a_broken_spot() {
        // 0 -> A --0--> A -> 0 has homology A in the middle degrees.
        let a = preset_algebra(FieldSpec::Prime(2), "kx2", None).unwrap();
        let reg = Module::regular(&a, Side::Left);
        let zero_map = ModuleMap::new(
            reg.clone(),
            reg.clone(),
            crate::linalg::Matrix::zero(FieldSpec::Prime(2), 2, 2),
        )
        .unwrap();
        let z = Module::zero(&a, Side::Left);
        let maps = vec![
            ModuleMap::new(reg.clone(), z.clone(), crate::linalg::Matrix::zero(FieldSpec::Prime(2), 0, 2)).unwrap(),
            zero_map,
            ModuleMap::new(z.clone(), reg.clone(), crate::linalg::Matrix::zero(FieldSpec::Prime(2), 2, 0)).unwrap(),
        ];
        let c = Complex::new(0, vec![z.clone(), reg.clone(), reg, z], maps).unwrap();
        assert!(c.is_complex());
        assert_eq!(c.homology_dim(1), Some(2));
        assert_eq!(c.homology_dim(2), Some(2));
        assert!(!c.interior_exact());
    }
}

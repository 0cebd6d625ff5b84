//! Paratopisms: isotopisms combined with conjugate transformations.
//!
//! A paratopism is a quadruple (α, β, γ, η) acting as row permutation,
//! column permutation and symbol relabeling after the conjugate F_η, i.e.
//! the conjugate is taken first. For order n there are 6(n!)³ distinct
//! quadruples and they form a group which is *not* the direct product of
//! the isotopism group with S₃: moving an isotopism past a conjugate
//! permutes its three components.
//!
//! The swap laws implemented by [`swap_conjugate_isotopism`] are, writing
//! I = (g₁, g₂, g₃) for an isotopism:
//!
//! - I ∘ F_η = F_η ∘ I′ with I′ = (g_{η(1)}, g_{η(2)}, g_{η(3)});
//! - F_η ∘ I = I″ ∘ F_η with I″ = (g_{η⁻¹(1)}, g_{η⁻¹(2)}, g_{η⁻¹(3)}).
//!
//! They give the general composition rule
//! (a, η) ∘ (b, ζ) = ((a₁·b_{η⁻¹(1)}, a₂·b_{η⁻¹(2)}, a₃·b_{η⁻¹(3)}), ηζ).

use core::fmt;

use crate::conjugate::ConjugateTag;
use crate::error::Error;
use crate::perm::Permutation;
use crate::square::{Isotopism, LatinSquare};

/// An isotopism together with a conjugate tag; the tag acts first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Paratopism {
    iso: Isotopism,
    tag: ConjugateTag,
}

impl Paratopism {
    pub fn new(iso: Isotopism, tag: ConjugateTag) -> Self {
        Paratopism { iso, tag }
    }

    pub fn identity(n: usize) -> Self {
        Paratopism {
            iso: Isotopism::identity(n),
            tag: ConjugateTag::Rce,
        }
    }

    /// A pure conjugate transformation.
    pub fn from_tag(n: usize, tag: ConjugateTag) -> Self {
        Paratopism {
            iso: Isotopism::identity(n),
            tag,
        }
    }

    /// A pure isotopism.
    pub fn from_isotopism(iso: Isotopism) -> Self {
        Paratopism {
            iso,
            tag: ConjugateTag::Rce,
        }
    }

    pub fn degree(&self) -> usize {
        self.iso.degree()
    }

    pub fn isotopism(&self) -> &Isotopism {
        &self.iso
    }

    pub fn tag(&self) -> ConjugateTag {
        self.tag
    }

    pub fn is_identity(&self) -> bool {
        self.iso.is_identity() && self.tag.is_identity()
    }

    /// Conjugates first, then applies the isotopism.
    pub fn apply(&self, square: &LatinSquare) -> Result<LatinSquare, Error> {
        self.iso.apply(&square.conjugate(self.tag))
    }

    /// Group product: `other` acts first. The components of `other`'s
    /// isotopism are permuted by η⁻¹ as they move past this tag.
    pub fn compose(&self, other: &Paratopism) -> Result<Paratopism, Error> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let a = self.iso.components();
        let b = other.iso.components();
        let inv = self.tag.inverse().images();
        let iso = Isotopism::new(
            a[0].compose(b[inv[0]])?,
            a[1].compose(b[inv[1]])?,
            a[2].compose(b[inv[2]])?,
        )?;
        Ok(Paratopism {
            iso,
            tag: self.tag.compose(other.tag),
        })
    }

    /// The unique paratopism composing with this one to the identity:
    /// (b, η⁻¹) with b_j the inverse of component η(j).
    pub fn inverse(&self) -> Paratopism {
        let a = self.iso.components();
        let img = self.tag.images();
        let iso = Isotopism::new(
            a[img[0]].inverse(),
            a[img[1]].inverse(),
            a[img[2]].inverse(),
        )
        .expect("components share a degree");
        Paratopism {
            iso,
            tag: self.tag.inverse(),
        }
    }
}

impl fmt::Display for Paratopism {
    /// Semicolon-separated quadruple: "α; β; γ; η".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; {}", self.iso, self.tag)
    }
}

/// Which side of the isotopism the conjugate transformation sits on in the
/// composition being rewritten.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SwapSide {
    /// Rewrite F_η ∘ I as I″ ∘ F_η.
    Left,
    /// Rewrite I ∘ F_η as F_η ∘ I′.
    Right,
}

/// Moves a conjugate transformation past an isotopism, returning the
/// isotopism for the other side of the tag.
///
/// For `SwapSide::Right`, given I ∘ F_η the result I′ satisfies
/// I ∘ F_η = F_η ∘ I′ and has components (g_{η(1)}, g_{η(2)}, g_{η(3)}).
/// For `SwapSide::Left`, given F_η ∘ I the result I″ satisfies
/// F_η ∘ I = I″ ∘ F_η and has components indexed by η⁻¹ instead.
pub fn swap_conjugate_isotopism(
    tag: ConjugateTag,
    iso: &Isotopism,
    side: SwapSide,
) -> Isotopism {
    let g = iso.components();
    let idx = match side {
        SwapSide::Right => tag.images(),
        SwapSide::Left => tag.inverse().images(),
    };
    Isotopism::new(g[idx[0]].clone(), g[idx[1]].clone(), g[idx[2]].clone())
        .expect("components share a degree")
}

/// Convenience: a paratopism from raw parts.
pub fn paratopism(
    row: Permutation,
    col: Permutation,
    sym: Permutation,
    tag: ConjugateTag,
) -> Result<Paratopism, Error> {
    Ok(Paratopism::new(Isotopism::new(row, col, sym)?, tag))
}

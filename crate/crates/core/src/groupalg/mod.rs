//! Sparse group algebra elements, tensor powers, characters of elementary
//! abelian 2-groups and class functions of `S_4` and `A_5`.

mod classfn;
mod element;
mod tensor;
mod twogroup;

pub use classfn::{
    apply_char, slice_left, slice_right, CharGroup, ClassFunction, Functional, InflatedCharacter, A5_CLASSES,
    S4_CLASSES,
};
pub use element::{ElementRepr, GroupAlgebraElement, TermRepr};
pub use tensor::{Tensor, Tensor2, Tensor3, TensorRepr, TensorTermRepr};
pub use twogroup::{LinChar, TwoGroup};

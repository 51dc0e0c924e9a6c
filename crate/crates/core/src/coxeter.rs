//! Coxeter systems with weight functions: canonical element words, the
//! geometric root system, Bruhat order, and labeled inversion statistics.

pub mod element;
pub mod root;
pub mod system;
pub mod table;

pub use element::Element;
pub use root::{
    act_on_root, inversions, labeled_inversion_count, positive_roots, reflection_of_root, Root,
    RootSystem,
};
pub use system::{
    bruhat_leq, bruhat_leq_subword, enumerate_elements, enumerate_parabolic, reduced_words,
    CoxeterGroup, CoxeterSystem, Enumeration, Side,
};
pub use table::GroupTable;

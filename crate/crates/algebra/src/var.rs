use std::fmt::Debug;
use std::hash::Hash;

/// Marker for the indeterminate a univariate object is written in.
pub trait Indeterminate:
    Copy + Clone + Default + Debug + PartialEq + Eq + Hash + Send + Sync + 'static
{
    const SYMBOL: &'static str;
}

macro_rules! indeterminate {
    ($($(#[$doc:meta])* $name:ident => $sym:literal),* $(,)?) => {$(
        $(#[$doc])*
        #[derive(Copy, Clone, Default, Debug, PartialEq, Eq, Hash)]
        pub struct $name;
        impl Indeterminate for $name {
            const SYMBOL: &'static str = $sym;
        }
    )*};
}

indeterminate! {
    /// The Jack parameter.
    Alpha => "α",
    /// The reciprocal parameter `r = 1/α`.
    R => "r",
    /// Macdonald `t` (also used alone for `q = t` specialisations).
    T => "t",
    /// Macdonald `q`, used as the base variable of bivariate gcds.
    Q => "q",
    /// A free variable for identity checks.
    X => "x",
}

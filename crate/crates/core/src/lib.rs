pub mod coeff;
pub mod series;
pub mod special;
pub mod eulerian;
pub mod dsl;
pub mod identity;

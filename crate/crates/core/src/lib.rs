pub mod bijection;
pub mod cli;
pub mod eta;
pub mod family;
pub mod identity;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod ring;
pub mod series;
pub mod word;

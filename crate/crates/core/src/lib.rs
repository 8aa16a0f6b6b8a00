pub mod cli;
pub mod compression;
pub mod exactalg;
pub mod grasslimit;
pub mod liecore;
pub mod polycone;
pub mod spherical;

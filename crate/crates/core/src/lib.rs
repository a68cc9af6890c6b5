pub mod arena;
pub mod board;
pub mod builders;
pub mod golden;
pub mod oracle;
pub mod painter;
pub mod solver;
pub mod strategy;

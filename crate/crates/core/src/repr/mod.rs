//! Pictures of a commutation class: heaps, wiring diagrams, rhombic tilings.

pub mod heap;
pub mod svg;
pub mod tiling;
pub mod wiring;

pub use heap::{heap_of_word, linear_extension_count, representation_roundtrip, Heap, HeapCoord, HeapElement};
pub use svg::{render_svg, SvgOptions, ToSvg};
pub use tiling::{rhombic_tiling, rhombic_tiling_with_offset, Rhombus, Tiling, DEFAULT_ANGLE_OFFSET};
pub use wiring::{wiring_diagram, Rung, WiringDiagram};

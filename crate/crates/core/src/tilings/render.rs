use super::{Cell, Tiling};

/// Draws a tiling on the diamond grid, highest level first.
///
/// Lattice points of the lower and upper paths are `o`, cells of the k-th
/// tile are labelled `a`, `b`, ... (wrapping after `z`), and other lattice
/// points under the lower path are `.`.
pub fn render_ascii(t: &Tiling) -> String {
    let low = t.shape().low().heights();
    let high = t.shape().high().heights();
    let top = high.iter().copied().max().unwrap_or(0);
    let label = |c: Cell| {
        t.tiles().iter().position(|tile| tile.level_at(c.col) == Some(c.level)).map(|k| (b'a' + (k % 26) as u8) as char)
    };
    let mut out = String::new();
    for level in (0..=top).rev() {
        let mut row = String::new();
        for col in 0..low.len() {
            let ch = if level == low[col] || level == high[col] {
                'o'
            } else if let Some(c) = label(Cell { col, level }) {
                c
            } else if level < low[col] && (col as i32 + level) % 2 == 0 {
                '.'
            } else {
                ' '
            };
            row.push(ch);
            row.push(' ');
        }
        out.push_str(row.trim_end());
        out.push('\n');
    }
    out
}

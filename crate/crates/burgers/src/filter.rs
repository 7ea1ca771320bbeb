/// Diagonal modal filter `F_nn = (n/N)^{2s}`.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterMatrix {
    pub order: usize,
    pub dissipation_order: u32,
    pub diagonal: Vec<f64>,
}

impl FilterMatrix {
    pub fn new(order: usize, dissipation_order: u32) -> Self {
        let n = order as f64;
        let diagonal = (0..=order).map(|k| (k as f64 / n).powi(2 * dissipation_order as i32)).collect();
        FilterMatrix { order, dissipation_order, diagonal }
    }
}

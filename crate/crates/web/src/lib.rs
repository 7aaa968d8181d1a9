//! Browser demo. [`api`] holds the operations as plain functions returning
//! JSON strings so they can be tested natively; the wasm exports are thin
//! wrappers around them.

pub mod api;
pub mod svg;

#[cfg(target_arch = "wasm32")]
mod bindings {
    use wasm_bindgen::prelude::*;

    #[wasm_bindgen]
    pub fn type_view(alpha: &str, beta: &str, gamma: &str) -> Result<String, JsError> {
        crate::api::type_view(alpha, beta, gamma).map_err(|e| JsError::new(&e))
    }

    #[wasm_bindgen]
    pub fn sort_trace(sequence: &str, extended: bool) -> Result<String, JsError> {
        crate::api::sort_trace(sequence, extended).map_err(|e| JsError::new(&e))
    }

    #[wasm_bindgen]
    pub fn box_chain(from: &str, to: &str) -> Result<String, JsError> {
        crate::api::box_chain(from, to).map_err(|e| JsError::new(&e))
    }
}

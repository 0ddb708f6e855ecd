use anyhow::{bail, Context, Result};

/// Overrides the largest group order that will be materialized.
pub const ORDER_CAP_VAR: &str = "KODAIRA_ORDER_CAP";

/// The order cap from the environment, or the library default.
pub fn order_cap() -> Result<usize> {
    match std::env::var(ORDER_CAP_VAR) {
        Ok(v) => {
            let cap: usize = v
                .trim()
                .parse()
                .with_context(|| format!("{ORDER_CAP_VAR}={v:?} is not a number"))?;
            if cap == 0 {
                bail!("{ORDER_CAP_VAR} must be positive");
            }
            Ok(cap)
        }
        Err(std::env::VarError::NotPresent) => Ok(kodaira_core::DEFAULT_ORDER_CAP),
        Err(e) => bail!("{ORDER_CAP_VAR}: {e}"),
    }
}

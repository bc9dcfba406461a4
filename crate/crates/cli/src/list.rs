use serde::Serialize;

use ngwp_core::identities::CATALOG;

use crate::CliError;

#[derive(Serialize)]
struct Entry<'a> {
    id: &'a str,
    description: &'a str,
}

pub fn run(json: bool) -> Result<u8, CliError> {
    if json {
        let entries: Vec<Entry> = CATALOG.iter().map(|e| Entry { id: e.id, description: e.description }).collect();
        println!("{}", serde_json::to_string_pretty(&entries).map_err(|e| CliError::Failed(e.to_string()))?);
    } else {
        let width = CATALOG.iter().map(|e| e.id.len()).max().unwrap_or(0);
        for e in CATALOG {
            println!("{:width$}  {}", e.id, e.description);
        }
    }
    Ok(0)
}

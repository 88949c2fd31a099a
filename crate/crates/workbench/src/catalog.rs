//! Machine-readable dump of the value circumplex and the readiness scale,
//! for UIs and for shipping alongside bundles.

use serde::Serialize;
use tod_core::readiness::{scene_scale, NASA_NINE_LEVELS, NASA_SEVEN_LEVELS};
use tod_core::{SingleValue, TrlLevel, ValueType};

use crate::bundle::{CATALOG_NAME, CATALOG_VERSION};

#[derive(Debug, Serialize)]
pub struct CatalogDocument {
    pub name: &'static str,
    pub version: u64,
    pub value_types: Vec<ValueTypeEntry>,
    pub single_values: Vec<SingleValueEntry>,
    pub trl_scale: &'static [TrlLevel],
    pub reference_scales: ReferenceScales,
}

#[derive(Debug, Serialize)]
pub struct ValueTypeEntry {
    pub name: &'static str,
    pub wedge_index: u8,
    pub adjacent_types: Vec<ValueType>,
    pub single_values: Vec<SingleValue>,
}

#[derive(Debug, Serialize)]
pub struct SingleValueEntry {
    pub name: &'static str,
    pub value_type: ValueType,
    pub original_description: &'static str,
    pub additional_explanation: &'static str,
}

#[derive(Debug, Serialize)]
pub struct ReferenceScales {
    pub nasa_seven_level: &'static [&'static str],
    pub nasa_nine_level: &'static [&'static str],
}

pub fn catalog_document() -> CatalogDocument {
    CatalogDocument {
        name: CATALOG_NAME,
        version: CATALOG_VERSION,
        value_types: ValueType::ALL
            .into_iter()
            .map(|t| ValueTypeEntry {
                name: t.name(),
                wedge_index: t.wedge().index(),
                adjacent_types: t.adjacent_types(),
                single_values: t.members().collect(),
            })
            .collect(),
        single_values: SingleValue::all()
            .map(|v| {
                let info = v.info();
                SingleValueEntry {
                    name: info.name,
                    value_type: info.value_type,
                    original_description: info.original_description,
                    additional_explanation: info.additional_explanation,
                }
            })
            .collect(),
        trl_scale: scene_scale(),
        reference_scales: ReferenceScales {
            nasa_seven_level: &NASA_SEVEN_LEVELS,
            nasa_nine_level: &NASA_NINE_LEVELS,
        },
    }
}

pub fn catalog_json() -> String {
    let mut out = serde_json::to_string_pretty(&catalog_document()).expect("serializable");
    out.push('\n');
    out
}

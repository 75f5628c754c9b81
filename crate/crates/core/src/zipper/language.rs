//! Language registration and the structured AST exchange format.
//!
//! Nodes are written as `{"type": .., "ctor": .., "children": [..]}` and
//! leaves as `{"leaf": "string"|"int"|"bool", "value": ..}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::term::{ConstructorTag, Dyn, Leaf, ReflectError, Signature, Term, LEAF_CTOR};
use super::Zipper;

const LEAF_TYPES: [&str; 3] = ["String", "Int", "Bool"];

/// The set of nominal types making up one AST language.
#[derive(Debug, Clone)]
pub struct Language {
    name: &'static str,
    types: BTreeMap<&'static str, &'static [Signature]>,
}

impl Language {
    pub fn new(name: &'static str) -> Language {
        let mut lang = Language {
            name,
            types: BTreeMap::new(),
        };
        lang.add::<String>();
        lang.add::<i64>();
        lang.add::<bool>();
        lang
    }

    pub fn register<T: Term>(mut self) -> Language {
        self.add::<T>();
        self
    }

    fn add<T: Term>(&mut self) {
        self.types.insert(T::TYPE_NAME, T::signatures());
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn is_registered(&self, type_name: &str) -> bool {
        self.types.contains_key(type_name)
    }

    fn signatures(&self, type_name: &str) -> Result<(&'static str, &'static [Signature]), ReflectError> {
        self.types
            .get_key_value(type_name)
            .map(|(k, v)| (*k, *v))
            .ok_or_else(|| ReflectError::Unregistered(type_name.to_string()))
    }

    /// Resolves a constructor by name.
    pub fn tag(&self, type_name: &str, ctor_name: &str) -> Result<ConstructorTag, ReflectError> {
        let (ty, sigs) = self.signatures(type_name)?;
        sigs.iter()
            .find(|s| s.ctor_name == ctor_name)
            .map(|s| s.tag(ty))
            .ok_or_else(|| ReflectError::UnknownConstructor {
                type_name: type_name.to_string(),
                ctor_name: ctor_name.to_string(),
            })
    }

    fn signature_of(&self, tag: &ConstructorTag) -> Result<&'static Signature, ReflectError> {
        let (_, sigs) = self.signatures(tag.type_name)?;
        sigs.iter()
            .find(|s| s.ctor_name == tag.ctor_name)
            .ok_or_else(|| ReflectError::UnknownConstructor {
                type_name: tag.type_name.to_string(),
                ctor_name: tag.ctor_name.to_string(),
            })
    }

    /// Builds a node after checking child count and child types.
    pub fn rebuild(&self, tag: ConstructorTag, children: Vec<Dyn>) -> Result<Dyn, ReflectError> {
        if tag.is_leaf() {
            return Err(ReflectError::TypeMismatch {
                expected: "constructor tag".into(),
                found: tag.to_string(),
            });
        }
        let sig = self.signature_of(&tag)?;
        if sig.fields.len() != children.len() || tag.arity != children.len() {
            return Err(ReflectError::Arity {
                tag: tag.to_string(),
                expected: sig.fields.len(),
                found: children.len(),
            });
        }
        for (field, child) in sig.fields.iter().zip(&children) {
            if child.type_name() != *field {
                return Err(ReflectError::TypeMismatch {
                    expected: field.to_string(),
                    found: child.type_name().to_string(),
                });
            }
        }
        Ok(Dyn::node(tag, children))
    }

    /// Checks every node of `value` against the registered signatures.
    pub fn check(&self, value: &Dyn) -> Result<(), ReflectError> {
        let tag = value.tag();
        if tag.is_leaf() {
            return self.signatures(tag.type_name).map(|_| ());
        }
        for c in value.children() {
            self.check(c)?;
        }
        self.rebuild(tag, value.children().to_vec()).map(|_| ())
    }

    pub fn to_zipper(&self, root: Dyn) -> Result<Zipper, ReflectError> {
        self.check(&root)?;
        Ok(Zipper::new(root))
    }

    pub fn constructor_of(&self, z: &Zipper) -> Result<ConstructorTag, ReflectError> {
        let tag = z.tag();
        if tag.is_leaf() {
            self.signatures(tag.type_name)?;
            Ok(tag)
        } else {
            self.signature_of(&tag).map(|_| tag)
        }
    }

    pub fn export(&self, value: &Dyn) -> AstDoc {
        AstDoc::from(value)
    }

    /// Compact single-line JSON.
    pub fn export_json(&self, value: &Dyn) -> String {
        serde_json::to_string(&self.export(value)).expect("AST documents always serialize")
    }

    pub fn import_json(&self, text: &str) -> Result<Dyn, ReflectError> {
        let mut de = serde_json::Deserializer::from_str(text);
        de.disable_recursion_limit();
        let value = Value::deserialize(&mut de).map_err(|e| ReflectError::Format(e.to_string()))?;
        de.end().map_err(|e| ReflectError::Format(e.to_string()))?;
        self.import_value(&value)
    }

    fn import_value(&self, value: &Value) -> Result<Dyn, ReflectError> {
        let obj = value
            .as_object()
            .ok_or_else(|| ReflectError::Format(format!("expected an object, found {value}")))?;
        if let Some(kind) = obj.get("leaf") {
            let payload = obj
                .get("value")
                .ok_or_else(|| ReflectError::Format("leaf without `value`".into()))?;
            if obj.len() != 2 {
                return Err(ReflectError::Format("unexpected keys in leaf".into()));
            }
            let leaf = match (kind.as_str(), payload) {
                (Some("string"), Value::String(s)) => Leaf::Str(s.clone()),
                (Some("int"), Value::Number(n)) => Leaf::Int(n.as_i64().ok_or_else(|| {
                    ReflectError::Format(format!("integer leaf out of range: {n}"))
                })?),
                (Some("bool"), Value::Bool(b)) => Leaf::Bool(*b),
                _ => {
                    return Err(ReflectError::Format(format!(
                        "bad leaf {kind} with value {payload}"
                    )))
                }
            };
            return Ok(Dyn::leaf(leaf));
        }
        let field = |key: &str| {
            obj.get(key)
                .ok_or_else(|| ReflectError::Format(format!("node without `{key}`")))
        };
        let type_name = field("type")?
            .as_str()
            .ok_or_else(|| ReflectError::Format("`type` must be a string".into()))?;
        let ctor_name = field("ctor")?
            .as_str()
            .ok_or_else(|| ReflectError::Format("`ctor` must be a string".into()))?;
        let children = field("children")?
            .as_array()
            .ok_or_else(|| ReflectError::Format("`children` must be an array".into()))?;
        if obj.len() != 3 {
            return Err(ReflectError::Format("unexpected keys in node".into()));
        }
        if LEAF_TYPES.contains(&type_name) || ctor_name == LEAF_CTOR {
            return Err(ReflectError::Format(format!(
                "leaf type `{type_name}` written as a node"
            )));
        }
        let tag = self.tag(type_name, ctor_name)?;
        let children = children
            .iter()
            .map(|c| self.import_value(c))
            .collect::<Result<Vec<_>, _>>()?;
        self.rebuild(tag, children)
    }
}

/// Serializable mirror of a [`Dyn`] tree.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum AstDoc {
    Node {
        #[serde(rename = "type")]
        type_name: String,
        ctor: String,
        children: Vec<AstDoc>,
    },
    Leaf {
        leaf: &'static str,
        value: Value,
    },
}

impl From<&Dyn> for AstDoc {
    fn from(d: &Dyn) -> AstDoc {
        match d.as_leaf() {
            Some(l) => AstDoc::Leaf {
                leaf: l.kind(),
                value: match l {
                    Leaf::Str(s) => Value::String(s.clone()),
                    Leaf::Int(n) => Value::from(*n),
                    Leaf::Bool(b) => Value::Bool(*b),
                },
            },
            None => {
                let tag = d.tag();
                AstDoc::Node {
                    type_name: tag.type_name.to_string(),
                    ctor: tag.ctor_name.to_string(),
                    children: d.children().iter().map(AstDoc::from).collect(),
                }
            }
        }
    }
}

# Domain types with to_dict() serialization

"""Services for the oriented-matroid algorithms."""

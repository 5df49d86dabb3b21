namespace slab {}

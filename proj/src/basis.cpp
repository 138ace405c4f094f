namespace l2b {}

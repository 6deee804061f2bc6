"""ddhpake - password-authenticated key exchange over prime-order subgroups."""

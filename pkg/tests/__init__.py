# ddhpake tests

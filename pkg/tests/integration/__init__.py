# Integration Tests Package

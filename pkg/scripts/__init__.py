# Test scripts package

# Utils package


